#include "chordweights/cli.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chordweights/acceptance.hpp"
#include "chordweights/band_surgery.hpp"
#include "chordweights/chord_diagram.hpp"
#include "chordweights/errors.hpp"
#include "chordweights/gf2_matrix.hpp"
#include "chordweights/relations.hpp"
#include "chordweights/weight_systems.hpp"

namespace chordweights::cli {

namespace {

using nlohmann::ordered_json;

class Emitter {
public:
  Emitter(std::ostream &out, bool human) : out_(out), human_(human) {}

  void emit(const ordered_json &j) {
    if (!human_) {
      out_ << j.dump() << '\n';
      return;
    }
    std::size_t width = 0;
    for (const auto &[k, v] : j.items()) width = std::max(width, k.size());
    for (const auto &[k, v] : j.items()) {
      out_ << k << std::string(width - k.size() + 2, ' ');
      out_ << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
    out_ << '\n';
  }

private:
  std::ostream &out_;
  bool human_;
};

std::vector<MarkedChordDiagram> read_diagrams(const std::vector<std::string> &args,
                                              std::istream &in) {
  std::vector<MarkedChordDiagram> out;
  if (!args.empty()) {
    for (const auto &a : args) out.push_back(parse_diagram(a));
    return out;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_diagram(line));
  }
  return out;
}

ordered_json poly_or_null(const MarkedChordDiagram &d, BivariatePolynomial (*f)(const MarkedChordDiagram &)) {
  if (d.has_marks()) return nullptr;
  return f(d).to_string();
}

ordered_json invariants_json(const MarkedChordDiagram &input, bool debug) {
  const MarkedChordDiagram d = canonical_form(input);
  const MarkedGraph g = intersection_graph(d);
  const auto adj = adjacency_matrix(g);
  ordered_json j;
  j["diagram"] = d.to_string();
  j["degree"] = d.degree();
  j["rank"] = gf2_rank(adj);
  j["det"] = gf2_det(adj);
  j["nullity"] = gf2_nullity(adj);
  j["components"] = boundary_components(d);
  j["conway"] = d.has_marks() ? ordered_json(nullptr) : ordered_json(conway(d));
  j["homfly"] = poly_or_null(d, homfly);
  j["homfly_deframed"] = poly_or_null(d, homfly_deframed);
  j["kauffman"] = poly_or_null(d, kauffman);
  j["kauffman_deframed"] = poly_or_null(d, kauffman_deframed);
  if (debug) {
    j["kauffman_marked"] = kauffman_marked(d).to_string();
    if (!d.has_marks()) {
      j["t_deframed"] = t_poly_deframed(g).to_x_string();
      j["t_deframed_uncorrected"] = t_poly_deframed_uncorrected(g).to_x_string();
    }
  }
  return j;
}

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

ordered_json coordinates_json(const std::vector<Rational> &coords) {
  ordered_json arr = ordered_json::array();
  for (const auto &c : coords) arr.push_back(c.str());
  return arr;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Weight systems on marked chord diagrams via intersection graphs"};
  app.require_subcommand(1);
  bool human = false;
  app.add_flag("--human", human, "Render tables instead of JSON lines");

  std::vector<std::string> diagram_args;
  bool debug = false;
  auto *invariants = app.add_subcommand("invariants", "Rank, determinant and weight systems of diagrams");
  invariants->add_option("diagram", diagram_args, "Diagram words, e.g. \"1 2 1 2\" (default: stdin)");
  invariants->add_flag("--debug", debug, "Also print K^m and both deframed T values");

  int degree = 0;
  bool marked = false;
  auto *enumerate = app.add_subcommand("enumerate", "All diagrams of a degree up to rotation");
  enumerate->add_option("-n", degree, "Degree")->required()->check(CLI::Range(0, 8));
  enumerate->add_flag("--marked", marked, "Include every mark subset");

  bool trace = false;
  auto *surgery = app.add_subcommand("surgery", "Circle count after surgering every chord");
  surgery->add_option("diagram", diagram_args, "Diagram words (default: stdin)");
  surgery->add_flag("--trace", trace, "Print the traversal cycles");

  auto *caravan = app.add_subcommand("caravan", "Marked caravan class of diagrams");
  caravan->add_option("diagram", diagram_args, "Diagram words (default: stdin)");

  std::string kind_name;
  std::string weights_list;
  auto *check = app.add_subcommand("check", "Evaluate weight systems on generated relations");
  check->add_option("--kind", kind_name, "1t, 4t, 2t or ext2t")->required();
  check->add_option("--weights", weights_list, "Comma separated weight system names")->required();
  check->add_option("-n", degree, "Degree")->required();

  std::string space_name;
  bool classes = false;
  auto *quotient = app.add_subcommand("quotient-dim", "Dimension of a relation quotient");
  quotient->add_option("-n", degree, "Degree")->required();
  quotient->add_option("--space", space_name, "a (4T), b (2T) or bm (extended 2T)")->required();
  quotient->add_flag("--classes", classes, "Print quotient coordinates of every diagram");

  auto *selftest = app.add_subcommand("selftest", "Run the acceptance criteria");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  Emitter emit(out, human);
  try {
    if (*invariants) {
      for (const auto &d : read_diagrams(diagram_args, in)) emit.emit(invariants_json(d, debug));
      return kOk;
    }
    if (*enumerate) {
      for (const auto &d : enumerate_diagrams(degree, marked)) {
        ordered_json j;
        j["degree"] = degree;
        j["diagram"] = d.to_string();
        emit.emit(j);
      }
      return kOk;
    }
    if (*surgery) {
      for (const auto &input : read_diagrams(diagram_args, in)) {
        const auto d = canonical_form(input);
        const SurgeryTrace st = surgery_trace(d);
        ordered_json j;
        j["diagram"] = d.to_string();
        j["components"] = st.components;
        if (trace) {
          ordered_json cycles = ordered_json::array();
          for (const auto &cycle : st.cycles) {
            ordered_json c = ordered_json::array();
            for (const auto &v : cycle) c.push_back({{"arc", v.arc}, {"forward", v.forward}});
            cycles.push_back(c);
          }
          j["cycles"] = cycles;
        }
        emit.emit(j);
      }
      return kOk;
    }
    if (*caravan) {
      for (const auto &input : read_diagrams(diagram_args, in)) {
        const auto d = canonical_form(input);
        const CaravanClass c = caravan_normal_form(d);
        ordered_json j;
        j["diagram"] = d.to_string();
        j["n1"] = c.n1;
        j["n2"] = c.n2;
        j["n3"] = c.n3;
        j["caravan"] = realize_caravan(c).to_string();
        emit.emit(j);
      }
      return kOk;
    }
    if (*check) {
      const RelationKind kind = relation_kind_from_name(kind_name);
      const auto names = split_list(weights_list);
      if (names.empty()) throw ParseError("--weights needs at least one name");
      std::vector<WeightSystem> weights;
      for (const auto &name : names) {
        // On marked diagrams the Kauffman weight is K^m.
        if (kind == RelationKind::extended_two_term && name == "kauffman") {
          weights.push_back(WeightSystem::kauffman_marked);
        } else {
          weights.push_back(weight_system_from_name(name));
        }
      }
      bool all_ok = true;
      for (auto w : weights) {
        const VanishingReport rep = check_vanishing(w, degree, kind);
        ordered_json j;
        j["kind"] = std::string(name_of(kind));
        j["weight"] = std::string(name_of(w));
        j["n"] = degree;
        j["total"] = rep.total;
        j["failures"] = rep.failures.size();
        if (!rep.failures.empty()) {
          all_ok = false;
          ordered_json ex = ordered_json::array();
          for (std::size_t i = 0; i < rep.failures.size() && i < 5; ++i)
            ex.push_back({{"relation", rep.failures[i].relation}, {"value", rep.failures[i].value}});
          j["examples"] = ex;
        }
        emit.emit(j);
      }
      return all_ok ? kOk : kCheckFailed;
    }
    if (*quotient) {
      const QuotientSpace space = quotient_space_from_name(space_name);
      const SpanReport rep = span_analysis(degree, space);
      ordered_json j;
      j["space"] = std::string(name_of(space));
      j["n"] = degree;
      j["diagrams"] = rep.diagrams;
      j["relations"] = rep.relations;
      j["relation_rank"] = rep.relation_rank;
      j["dimension"] = rep.dimension;
      ordered_json basis = ordered_json::array();
      for (const auto &d : rep.quotient_basis) basis.push_back(d.to_string());
      j["quotient_basis"] = basis;
      if (space != QuotientSpace::a) j["caravan_failures"] = rep.caravan_failures.size();
      if (classes) {
        ordered_json cls = ordered_json::object();
        for (const auto &[d, coords] : rep.class_of) cls[d.to_string()] = coordinates_json(coords);
        j["class_of"] = cls;
      }
      emit.emit(j);
      return rep.caravan_failures.empty() ? kOk : kCheckFailed;
    }
    if (*selftest) {
      bool all_ok = true;
      for (const auto &c : acceptance::criteria()) {
        const auto r = acceptance::run_criterion(c);
        ordered_json j;
        j["criterion"] = r.id;
        j["title"] = r.title;
        j["passed"] = r.passed;
        j["checked"] = r.checked;
        if (!r.failures.empty()) j["failures"] = r.failures;
        emit.emit(j);
        all_ok = all_ok && r.passed;
      }
      return all_ok ? kOk : kCheckFailed;
    }
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PreconditionError &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  err << app.help();
  return kUsageError;
}

} // namespace chordweights::cli
