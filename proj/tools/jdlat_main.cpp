#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jdlat/antimatroid.hpp"
#include "jdlat/coord.hpp"
#include "jdlat/ej.hpp"
#include "jdlat/enumeration.hpp"
#include "jdlat/equivalence.hpp"
#include "jdlat/io.hpp"
#include "jdlat/lattice.hpp"
#include "jdlat/perm.hpp"
#include "jdlat/trajectories.hpp"

namespace {

struct Options {
  std::string out;
  std::uint64_t seed = 0;
  int max_n = 6;
  int max_k = 4;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    jdlat::write_text_file(opt.out, text);
  }
}

bool is_json_path(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

jdlat::PermTuple load_guarded_tuple(const Options& opt, const std::string& path) {
  jdlat::PermTuple chains = jdlat::load_perm_tuple(path);
  if (chains.degree() > opt.max_n) {
    throw std::invalid_argument("degree " + std::to_string(chains.degree()) +
                                " exceeds --max-n " + std::to_string(opt.max_n));
  }
  if (chains.chain_count() > opt.max_k) {
    throw std::invalid_argument("chain count " + std::to_string(chains.chain_count()) +
                                " exceeds --max-k " + std::to_string(opt.max_k));
  }
  return chains;
}

jdlat::FiniteLattice load_lattice_any(const Options& opt, const std::string& path) {
  if (is_json_path(path)) {
    return jdlat::load_lattice_json(path);
  }
  return jdlat::build_ej_lattice(load_guarded_tuple(opt, path)).lattice;
}

int run_build_ej(const Options& opt, const std::string& path, const std::string& format) {
  jdlat::SubsetLattice built = jdlat::build_ej_lattice(load_guarded_tuple(opt, path));
  if (format == "json") {
    emit(opt, jdlat::lattice_to_json(built.lattice));
  } else {
    emit(opt, jdlat::write_set_family(jdlat::make_family(built.ground_degree, built.sets)));
  }
  return 0;
}

int run_build_cz(const Options& opt, const std::string& path, const std::string& format) {
  jdlat::TupleLattice built = jdlat::build_coord_lattice(load_guarded_tuple(opt, path));
  if (format == "json") {
    emit(opt, jdlat::lattice_to_json(built.lattice));
  } else {
    std::ostringstream out;
    for (const jdlat::CoordTuple& x : built.tuples) {
      out << jdlat::tuple_label(x, built.ground_degree) << '\n';
    }
    emit(opt, out.str());
  }
  return 0;
}

int run_map(const Options& opt, const std::string& path) {
  const jdlat::PermTuple chains = load_guarded_tuple(opt, path);
  const jdlat::SubsetLattice built = jdlat::build_ej_lattice(chains);
  std::ostringstream out;
  for (jdlat::SubsetMask u : built.sets) {
    out << jdlat::subset_label(u, built.ground_degree) << " -> "
        << jdlat::tuple_label(jdlat::subset_to_coords(chains, u), built.ground_degree) << '\n';
  }
  emit(opt, out.str());
  return 0;
}

int run_check(const Options& opt, const std::string& path) {
  const jdlat::FiniteLattice L = load_lattice_any(opt, path);
  nlohmann::json report;
  const bool semimodular = L.is_semimodular();
  report["semimodular"] = semimodular;
  report["jd"] = L.is_join_distributive();
  bool pass = false;
  if (semimodular) {
    const jdlat::CharacterizationReport c = jdlat::characterize(L);
    report["cond_ii"] = c.chain_crossing;
    report["cond_iii"] = c.no_comparable_pair;
    report["witness"] = c.witness;
    pass = c.join_distributive && c.chain_crossing && c.no_comparable_pair;
  } else {
    const auto bad = L.semimodularity_violation();
    report["cond_ii"] = nullptr;
    report["cond_iii"] = nullptr;
    report["witness"] = "semimodularity fails at (" + L.label(bad->first) + ", " +
                        L.label(bad->second) + ")";
  }
  emit(opt, report.dump(2) + "\n");
  return pass ? 0 : 1;
}

int run_trajectories(const Options& opt, const std::string& path, const std::string& format) {
  const jdlat::FiniteLattice L = load_lattice_any(opt, path);
  const jdlat::TrajectoryPartition part = jdlat::trajectories(L);
  const std::vector<jdlat::PrimeInterval>& covers = L.covers();
  if (format == "json") {
    nlohmann::json doc;
    doc["count"] = part.blocks.size();
    nlohmann::json blocks = nlohmann::json::array();
    for (const std::vector<int>& block : part.blocks) {
      nlohmann::json intervals = nlohmann::json::array();
      for (int idx : block) {
        intervals.push_back({covers[static_cast<std::size_t>(idx)].a,
                             covers[static_cast<std::size_t>(idx)].b});
      }
      blocks.push_back(std::move(intervals));
    }
    doc["blocks"] = std::move(blocks);
    emit(opt, doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "trajectories: " << part.blocks.size() << '\n';
    for (std::size_t t = 0; t < part.blocks.size(); ++t) {
      out << 'T' << (t + 1) << ':';
      for (int idx : part.blocks[t]) {
        const jdlat::PrimeInterval c = covers[static_cast<std::size_t>(idx)];
        out << ' ' << L.label(c.a) << '<' << L.label(c.b);
      }
      out << '\n';
    }
    emit(opt, out.str());
  }
  return 0;
}

int run_iso(const Options& opt, const std::string& path_a, const std::string& path_b,
            const std::string& format) {
  const jdlat::FiniteLattice A = load_lattice_any(opt, path_a);
  const jdlat::FiniteLattice B = load_lattice_any(opt, path_b);
  const auto map = jdlat::find_isomorphism(A, B);
  if (format == "json") {
    nlohmann::json doc;
    doc["isomorphic"] = map.has_value();
    doc["map"] = map ? nlohmann::json(*map) : nlohmann::json();
    emit(opt, doc.dump(2) + "\n");
  } else {
    emit(opt, map ? "isomorphic\n" : "not isomorphic\n");
  }
  return map ? 0 : 1;
}

int run_mir(const Options& opt, const std::string& path, const std::string& format) {
  const jdlat::PermTuple tuple = load_guarded_tuple(opt, path);
  const std::vector<jdlat::CoordTuple> formula = jdlat::meet_irreducible_tuples(tuple);
  const jdlat::TupleLattice built = jdlat::build_coord_lattice(tuple);
  std::vector<jdlat::CoordTuple> brute;
  for (int x : built.lattice.meet_irreducibles()) {
    brute.push_back(built.tuples[static_cast<std::size_t>(x)]);
  }
  std::vector<jdlat::CoordTuple> sorted_formula = formula;
  std::sort(sorted_formula.begin(), sorted_formula.end());
  std::sort(brute.begin(), brute.end());
  const bool match = sorted_formula == brute;
  if (format == "json") {
    nlohmann::json doc;
    nlohmann::json rows = nlohmann::json::array();
    for (const jdlat::CoordTuple& x : formula) {
      rows.push_back(jdlat::tuple_label(x, tuple.degree()));
    }
    doc["mir"] = std::move(rows);
    doc["brute_force_match"] = match;
    emit(opt, doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (const jdlat::CoordTuple& x : formula) {
      out << jdlat::tuple_label(x, tuple.degree()) << '\n';
    }
    out << "formula matches brute force: " << (match ? "yes" : "no") << '\n';
    emit(opt, out.str());
  }
  return match ? 0 : 1;
}

int run_enumerate(const Options& opt, int n, bool realize, bool slow) {
  if (realize && n >= 4 && !slow) {
    throw std::invalid_argument(
        "realizing every class at n = 4 scans thousands of candidate tuples; add --slow");
  }
  const std::vector<jdlat::CensusEntry> census = jdlat::census_jd_lattices(n, realize, opt.seed);
  emit(opt, jdlat::census_to_csv(census));
  if (realize) {
    for (const jdlat::CensusEntry& entry : census) {
      if (!entry.witness) {
        return 1;  // a class with no realizing tuple would break the characterization
      }
    }
  }
  return 0;
}

int run_export(const Options& opt, const std::string& path, bool as_dot) {
  const auto load = [&]() -> jdlat::FiniteLattice {
    if (is_json_path(path)) {
      return jdlat::load_lattice_json(path);
    }
    const jdlat::PermTuple chains = load_guarded_tuple(opt, path);
    const jdlat::SubsetLattice built = jdlat::build_ej_lattice(chains);
    std::vector<std::string> labels;
    labels.reserve(built.sets.size());
    for (jdlat::SubsetMask u : built.sets) {
      labels.push_back(jdlat::subset_label(u, built.ground_degree) + "," +
                       jdlat::tuple_label(jdlat::subset_to_coords(chains, u),
                                          built.ground_degree));
    }
    return built.lattice.with_labels(std::move(labels));
  };
  const jdlat::FiniteLattice L = load();
  emit(opt, as_dot ? jdlat::lattice_to_dot(L) : jdlat::lattice_to_json(L));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"join-distributive lattices from permutation tuples"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--out", opt.out, "write results to this file instead of stdout");
  app.add_option("--seed", opt.seed, "seed for randomized scan orders; 0 keeps lexicographic");
  app.add_option("--max-n", opt.max_n, "largest accepted permutation degree")
      ->capture_default_str();
  app.add_option("--max-k", opt.max_k, "largest accepted chain count")->capture_default_str();

  std::string in_path;
  std::string in_path_b;
  std::string format = "text";
  int census_n = 1;
  bool realize = false;
  bool slow = false;
  bool as_dot = false;
  bool as_json = false;
  int rc = 0;

  const auto verb = [&app](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  const auto format_option = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* build_ej = verb("build-ej", "union-closure lattice of a permutation tuple");
  build_ej->add_option("permfile", in_path, "tuple file: 'n k' then k-1 image rows")->required();
  format_option(build_ej);
  build_ej->callback([&] { rc = run_build_ej(opt, in_path, format); });

  CLI::App* build_cz = verb("build-cz", "eligible-tuple lattice of a permutation tuple");
  build_cz->add_option("permfile", in_path, "tuple file: 'n k' then k-1 image rows")->required();
  format_option(build_cz);
  build_cz->callback([&] { rc = run_build_cz(opt, in_path, format); });

  CLI::App* map_cmd = verb("map", "subset -> coordinate table of the union-closure lattice");
  map_cmd->add_option("permfile", in_path)->required();
  map_cmd->callback([&] { rc = run_map(opt, in_path); });

  CLI::App* check = verb("check", "join-distributivity battery, JSON report");
  check->add_option("input", in_path, "lattice .json or permutation tuple file")->required();
  check->callback([&] { rc = run_check(opt, in_path); });

  CLI::App* traj = verb("trajectories", "trajectory partition of the prime intervals");
  traj->add_option("input", in_path, "lattice .json or permutation tuple file")->required();
  format_option(traj);
  traj->callback([&] { rc = run_trajectories(opt, in_path, format); });

  CLI::App* iso = verb("iso", "order isomorphism test between two lattices");
  iso->add_option("a", in_path)->required();
  iso->add_option("b", in_path_b)->required();
  format_option(iso);
  iso->callback([&] { rc = run_iso(opt, in_path, in_path_b, format); });

  CLI::App* mir = verb("mir", "meet-irreducible coordinates, formula vs brute force");
  mir->add_option("permfile", in_path)->required();
  format_option(mir);
  mir->callback([&] { rc = run_mir(opt, in_path, format); });

  CLI::App* enumerate = verb("enumerate", "antimatroid census by lattice isomorphism, CSV");
  enumerate->add_option("--n", census_n, "ground degree, at most 4")->required();
  enumerate->add_flag("--realize", realize, "search a realizing tuple per class");
  enumerate->add_flag("--slow", slow, "confirm the long n = 4 realization run");
  enumerate->callback([&] { rc = run_enumerate(opt, census_n, realize, slow); });

  CLI::App* export_cmd = verb("export", "render a lattice as DOT or JSON");
  export_cmd->add_option("input", in_path, "lattice .json or permutation tuple file")->required();
  export_cmd->add_flag("--dot", as_dot, "Hasse diagram in DOT");
  export_cmd->add_flag("--json", as_json, "lattice JSON document");
  export_cmd->callback([&] {
    if (as_dot == as_json) {
      throw CLI::ValidationError("export", "pick exactly one of --dot or --json");
    }
    rc = run_export(opt, in_path, as_dot);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
