#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "derring/scenario.hpp"

using namespace derring;

namespace {

int write_json(const std::string &path, const nlohmann::json &j) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return 2;
  }
  out << j.dump(2) << "\n";
  return 0;
}

void emit(const nlohmann::json &j, const std::string &json_path, bool quiet) {
  if (!json_path.empty()) write_json(json_path, j);
  if (!quiet) std::cout << j.dump(2) << "\n";
}

nlohmann::json derivation_json(const GroupRing *gr, const FiniteRing &b,
                               const DerivationSpace &space) {
  nlohmann::json j;
  j["carrier"] = b.name();
  j["cardinality"] = space.cardinality().get_str();
  nlohmann::json gens = nlohmann::json::array();
  for (const Derivation &d : space.generators()) {
    nlohmann::json gj;
    nlohmann::json imgs = nlohmann::json::array();
    for (const Coeffs &im : d.images()) imgs.push_back(im);
    gj["images"] = imgs;
    auto w = inner_witness(b, d);
    gj["inner"] = w.has_value();
    if (w) gj["witness"] = *w;
    if (gr) {
      nlohmann::json per_g = nlohmann::json::array();
      for (std::size_t gi = 0; gi < gr->group().order(); ++gi)
        per_g.push_back(d.apply(gr->basis_element(gi)));
      gj["group_images"] = per_g;
    }
    gens.push_back(std::move(gj));
  }
  j["generators"] = std::move(gens);
  return j;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"derring: exact derivation rings of finite rings and group rings"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string json_path;
  std::uint64_t seed = 1;
  std::int64_t cap = 4096;
  bool quiet = false;
  app.add_option("--json", json_path, "write the JSON result to this path");
  app.add_option("--seed", seed, "seed for randomized scenario sampling");
  app.add_option("--cap", cap, "element enumeration cap");
  app.add_flag("--quiet", quiet, "suppress stdout report");

  std::string ring_spec, group_spec, object_spec = "ider", scenario_path;
  bool r_derivations = false;

  CLI::App *ring_cmd = app.add_subcommand("ring", "inspect a finite ring");
  ring_cmd->add_option("--ring", ring_spec, "ring spec")->required();

  CLI::App *group_cmd = app.add_subcommand("group", "inspect a finite group");
  group_cmd->add_option("--group", group_spec, "group spec")->required();

  CLI::App *der_cmd =
      app.add_subcommand("der", "derivations of a ring or group ring");
  der_cmd->add_option("--ring", ring_spec, "ring spec")->required();
  der_cmd->add_option("--group", group_spec, "group spec (omit for plain ring)");
  der_cmd->add_flag("--r-derivations", r_derivations,
                    "restrict to R-derivations of R[G]");

  CLI::App *lie_cmd = app.add_subcommand("lie", "Lie structure reports");
  lie_cmd->add_option("--ring", ring_spec, "ring spec")->required();
  lie_cmd->add_option("--group", group_spec, "group spec");
  lie_cmd->add_option("--object", object_spec,
                      "carrier | der | rder | ider (default ider)");

  CLI::App *sol_cmd = app.add_subcommand("solders", "enumerate solders");
  sol_cmd->add_option("--ring", ring_spec, "ring spec")->required();

  CLI::App *check_cmd = app.add_subcommand("check", "run a scenario file");
  check_cmd->add_option("scenario", scenario_path, "scenario JSON path")
      ->required();

  CLI::App *scan_cmd =
      app.add_subcommand("scan", "run every check over the default families");
  (void)scan_cmd;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Caps caps;
  caps.enumeration = cap;

  try {
    if (ring_cmd->parsed()) {
      FiniteRing r = parse_ring(ring_spec);
      emit(ring_info_json(r, caps), json_path, quiet);
      return 0;
    }
    if (group_cmd->parsed()) {
      FiniteGroup g = parse_group(group_spec);
      emit(group_info_json(g), json_path, quiet);
      return 0;
    }
    if (der_cmd->parsed()) {
      FiniteRing r = parse_ring(ring_spec);
      nlohmann::json j;
      if (group_spec.empty()) {
        DerivationSpace space = der(r, caps);
        j = derivation_json(nullptr, r, space);
      } else {
        FiniteGroup g = parse_group(group_spec);
        GroupRing gr = GroupRing::build(r, g, caps);
        DerivationSpace space =
            r_derivations ? der_r(gr, caps) : der(gr.carrier(), caps);
        j = derivation_json(&gr, gr.carrier(), space);
        j["r_derivations"] = r_derivations;
      }
      emit(j, json_path, quiet);
      return 0;
    }
    if (lie_cmd->parsed()) {
      FiniteRing r = parse_ring(ring_spec);
      nlohmann::json j;
      auto series_json = [](const FiniteLieRing &l) {
        nlohmann::json lj;
        lj["cardinality"] = l.cardinality().get_str();
        std::vector<std::string> lower, derived;
        for (const Submodule &t : lower_central_series(l).terms)
          lower.push_back(t.cardinality().get_str());
        for (const Submodule &t : derived_series(l).terms)
          derived.push_back(t.cardinality().get_str());
        lj["lower_central_series"] = lower;
        lj["derived_series"] = derived;
        auto nil = nilpotency_class(l);
        auto solv = solvable_length(l);
        lj["nilpotency_class"] = nil ? nlohmann::json(*nil) : nullptr;
        lj["solvable_length"] = solv ? nlohmann::json(*solv) : nullptr;
        return lj;
      };
      if (group_spec.empty()) {
        if (object_spec == "der") {
          LiePresentation lp = derivation_lie(der(r, caps), "Der");
          j = series_json(lp.lie);
        } else {
          j = series_json(from_associative(r));
        }
        j["object"] = object_spec;
      } else {
        FiniteGroup g = parse_group(group_spec);
        GroupRing gr = GroupRing::build(r, g, caps);
        if (object_spec == "carrier") {
          j = series_json(from_associative(gr.carrier()));
        } else if (object_spec == "der") {
          j = series_json(derivation_lie(der(gr.carrier(), caps), "Der").lie);
        } else if (object_spec == "rder") {
          j = series_json(derivation_lie(der_r(gr, caps), "Der_R").lie);
        } else if (object_spec == "ider") {
          InnerDerLie ider = inner_der_lie(gr, caps);
          j = series_json(ider.via_quotient.lie);
          j["constructions_agree"] = true;  // inner_der_lie throws otherwise
        } else {
          std::cerr << "unknown --object " << object_spec << "\n";
          return 2;
        }
        j["object"] = object_spec;
        j["carrier"] = gr.carrier().name();
      }
      emit(j, json_path, quiet);
      return 0;
    }
    if (sol_cmd->parsed()) {
      FiniteRing r = parse_ring(ring_spec);
      Caps scaps;
      scaps.solder_elements = std::min<std::int64_t>(cap, 64);
      std::vector<Solder> solders =
          enumerate_solders(r, scaps.solder_elements);
      nlohmann::json j;
      j["ring"] = r.name();
      j["count"] = solders.size();
      nlohmann::json arr = nlohmann::json::array();
      for (const Solder &h : solders) {
        nlohmann::json hj;
        nlohmann::json vals = nlohmann::json::array();
        for (const Coeffs &v : h.values) vals.push_back(v);
        hj["values"] = vals;
        SolderReport rep = check_solder_properties(r, h, scaps.solder_elements);
        hj["clean"] = rep.clean();
        hj["delta_is_derivation"] = rep.delta_is_derivation;
        arr.push_back(std::move(hj));
      }
      j["solders"] = std::move(arr);
      emit(j, json_path, quiet);
      return 0;
    }
    if (check_cmd->parsed()) {
      std::ifstream in(scenario_path);
      if (!in) {
        std::cerr << "cannot read " << scenario_path << "\n";
        return 2;
      }
      nlohmann::json cj = nlohmann::json::parse(in);
      ScenarioConfig cfg = ScenarioConfig::from_json(cj);
      if (seed != 1) cfg.seed = seed;
      Report rep = run_scenario(cfg);
      if (!json_path.empty()) write_json(json_path, rep.to_json());
      if (!quiet) std::cout << rep.text_summary();
      return rep.exit_code();
    }
    if (scan_cmd->parsed()) {
      Report rep = run_scan(seed, caps);
      if (!json_path.empty()) write_json(json_path, rep.to_json());
      if (!quiet) std::cout << rep.text_summary();
      return rep.exit_code();
    }
  } catch (const nlohmann::json::exception &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const cap_error &e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
