#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "secants/builtin_data.hpp"
#include "secants/certifier.hpp"
#include "secants/classifier.hpp"
#include "secants/io.hpp"
#include "secants/monodromy.hpp"
#include "secants/sampler.hpp"
#include "secants/tracker.hpp"

namespace {

using namespace secants;

// Exit codes: 0 success, 1 usage or I/O, 2 mathematical non-genericity,
// 3 certification incomplete.
int error_exit_code(const Error& e) {
  if (dynamic_cast<const CertificationIncompleteError*>(&e)) return 3;
  if (dynamic_cast<const NonGenericTargetError*>(&e) ||
      dynamic_cast<const SingularMatrixError*>(&e) ||
      dynamic_cast<const DegenerateCubicError*>(&e) ||
      dynamic_cast<const DegenerateSecantError*>(&e) ||
      dynamic_cast<const LoopFailureError*>(&e) ||
      dynamic_cast<const AmbiguousMatchingError*>(&e) ||
      dynamic_cast<const OrbitMismatchError*>(&e) ||
      dynamic_cast<const AmbiguousRealityError*>(&e) ||
      dynamic_cast<const ConjugationMismatchError*>(&e) ||
      dynamic_cast<const ParityViolationError*>(&e))
    return 2;
  return 1;
}

struct GlobalOpts {
  std::uint64_t seed = 0;
  int threads = 1;
  bool strict = false;
  std::string out;
};

TripleCount count_classes(const std::vector<OrbitRecord>& orbits) {
  TripleCount t;
  for (const OrbitRecord& o : orbits) {
    switch (o.secant_class) {
      case SecantClass::TotallyReal: ++t.n_t; break;
      case SecantClass::PartiallyReal: ++t.n_p; break;
      case SecantClass::MinimallyReal: ++t.n_m; break;
      case SecantClass::Nonreal: break;
    }
  }
  return t;
}

StartSet start_set_from_orbits(const ParameterMatrix& base,
                               const std::vector<OrbitRecord>& orbits) {
  StartSet s{base, {}, {}, {}, {}};
  for (std::size_t i = 0; i < 10; ++i) {
    s.representatives[i] = orbits[i].representative;
    for (std::size_t k = 0; k < 4; ++k) s.full_set[4 * i + k] = orbits[i].orbit[k];
  }
  return s;
}

std::string triple_str(const TripleCount& t) {
  std::ostringstream os;
  os << "(" << t.n_t << "," << t.n_p << "," << t.n_m << ")";
  return os.str();
}

void write_manifest_sibling(const std::string& data_path, const RunManifest& man) {
  write_text_file(data_path + ".manifest.json", manifest_to_json(man) + "\n");
}

// ---------------------------------------------------------------- solve

int cmd_solve(const GlobalOpts& g, const std::string& matrix_path, bool no_gamma) {
  ParameterMatrix M = read_matrix_file(matrix_path);
  StartSet start = bootstrap_start_set();
  TrackerConfig tcfg = TrackerConfig::with_seed(g.seed);
  if (no_gamma) tcfg.gamma = cplx(1.0, 0.0);
  SolveResult res = solve_at_parameter(M, start, tcfg, g.threads);
  if (!res.generic) {
    std::cerr << "non-generic target after " << res.attempts
              << " attempt(s): " << res.diagnostic << "\n";
    return 2;
  }
  TripleCount counts = count_classes(res.orbits);
  RunManifest man = make_manifest(
      "solve", g.seed,
      {{"matrix", matrix_path},
       {"no_gamma", no_gamma ? "true" : "false"},
       {"threads", std::to_string(g.threads)}});
  std::string payload = solution_to_json(res.orbits, counts, man);
  if (g.out.empty()) {
    std::cout << payload;
  } else {
    write_text_file(g.out, payload);
    std::cout << "census " << triple_str(counts) << ", n_R = " << counts.n_real()
              << "; solution written to " << g.out << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const GlobalOpts& g, const std::string& matrix_path) {
  ParameterMatrix M = read_matrix_file(matrix_path);
  StartSet start = bootstrap_start_set();
  SolveResult res = solve_at_parameter(M, start, TrackerConfig::with_seed(g.seed), g.threads);
  if (!res.generic) {
    std::cerr << "non-generic target after " << res.attempts
              << " attempt(s): " << res.diagnostic << "\n";
    return 2;
  }
  TripleCount counts = count_classes(res.orbits);
  std::ostringstream line;
  line << counts.n_t << "," << counts.n_p << "," << counts.n_m << "," << counts.n_real() << ",";
  for (std::size_t i = 0; i < res.orbits.size(); ++i)
    line << (i ? " " : "") << to_string(res.orbits[i].secant_class);
  line << "\n";
  if (g.out.empty()) {
    std::cout << line.str();
  } else {
    write_text_file(g.out, line.str());
    write_manifest_sibling(g.out, make_manifest("classify", g.seed,
                                                {{"matrix", matrix_path},
                                                 {"threads", std::to_string(g.threads)}}));
    std::cout << "census " << triple_str(counts) << " written to " << g.out << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- certify

int cmd_certify(const GlobalOpts& g, const std::string& matrix_path) {
  ParameterMatrix M = read_matrix_file(matrix_path);
  StartSet start = bootstrap_start_set();
  SolveResult res = solve_at_parameter(M, start, TrackerConfig::with_seed(g.seed), g.threads);
  if (!res.generic) {
    std::cerr << "non-generic target after " << res.attempts
              << " attempt(s): " << res.diagnostic << "\n";
    return 2;
  }
  CertificationReport report = certify_census(M, res.orbits, g.strict);
  std::vector<RealityFlag> point_reality(report.certificates.size(),
                                         RealityFlag::Undetermined);
  for (std::size_t i = 0; i < report.certificates.size(); ++i)
    point_reality[i] =
        certify_reality(M, report.certificates[i], report.certificates, int(i));
  RunManifest man = make_manifest("certify", g.seed,
                                  {{"matrix", matrix_path},
                                   {"strict", g.strict ? "true" : "false"},
                                   {"threads", std::to_string(g.threads)}});
  std::string payload = certificate_to_json(report, point_reality, man);
  if (g.out.empty()) {
    std::cout << payload;
  } else {
    write_text_file(g.out, payload);
    std::cout << "certified census "
              << (report.census_certified ? triple_str(*report.census_certified)
                                          : std::string("unavailable"))
              << ", distinct = " << (report.distinct ? "true" : "false")
              << ", refinement rounds = " << report.refinement_rounds
              << "; certificate written to " << g.out << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- monodromy

TriangleLoop resolve_loop(const std::string& spec) {
  if (spec == "builtin:gamma1")
    return TriangleLoop{{data::base_matrix(), data::loop_vertex(1, 1), data::loop_vertex(1, 2)},
                        "gamma1"};
  if (spec == "builtin:gamma2")
    return TriangleLoop{{data::base_matrix(), data::loop_vertex(2, 1), data::loop_vertex(2, 2)},
                        "gamma2"};
  return read_loop_file(spec);
}

std::string monodromy_to_json(const MonodromyRun& run, const RunManifest& man) {
  std::ostringstream os;
  os << "{\n  \"manifest\": " << manifest_to_json(man, 2) << ",\n";
  os << "  \"label\": \"" << json_escape(run.loop.label) << "\",\n";
  os << "  \"permutation\": \""
     << (run.permutation ? cycle_notation(*run.permutation) : "") << "\",\n";
  os << "  \"images\": [";
  for (int j = 0; j < 10; ++j)
    os << (j ? ", " : "") << (run.permutation ? run.permutation->images[std::size_t(j)] : 0);
  os << "],\n  \"edges\": [\n";
  for (std::size_t e = 0; e < 3; ++e) {
    const EdgeValidity& ev = run.edge_validity[e];
    os << "    {\"from\": " << ev.from << ", \"to\": " << ev.to << ", \"roots\": [";
    for (int r = 0; r < 3; ++r) {
      const cplx& z = ev.roots.roots[std::size_t(r)];
      os << (r ? ", " : "") << "[" << format_double(z.real()) << ", "
         << format_double(z.imag()) << "]";
    }
    os << "], \"advisory\": " << (ev.roots.advisory ? "true" : "false")
       << ", \"min_segment_distance\": " << format_double(ev.roots.min_segment_distance)
       << "}" << (e < 2 ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

void print_edge_table(const MonodromyRun& run) {
  for (const EdgeValidity& ev : run.edge_validity) {
    std::printf("  edge v%d-v%d det roots:", ev.from, ev.to);
    for (const cplx& z : ev.roots.roots) std::printf("  %.6f %+.6fi", z.real(), z.imag());
    std::printf("   (min distance to [0,1]: %.6f%s)\n", ev.roots.min_segment_distance,
                ev.roots.advisory ? ", ADVISORY: root near segment" : "");
  }
}

int cmd_monodromy(const GlobalOpts& g, const std::string& loop_spec,
                  const std::vector<std::string>& order_perms) {
  if (!order_perms.empty()) {
    std::vector<PermutationTen> gens;
    gens.reserve(order_perms.size());
    for (const std::string& s : order_perms) gens.push_back(permutation_from_cycles(s));
    std::cout << group_order(gens) << "\n";
    return 0;
  }
  if (loop_spec.empty()) {
    std::cerr << "monodromy: pass --loop or --order\n";
    return 1;
  }
  TriangleLoop loop = resolve_loop(loop_spec);
  StartSet start = bootstrap_start_set();
  if (!start.base.approx_equal(loop.vertices[0], 1e-9)) {
    SolveResult at_v0 =
        solve_at_parameter(loop.vertices[0], start, TrackerConfig::with_seed(g.seed), g.threads);
    at_v0.require_generic();
    start = start_set_from_orbits(loop.vertices[0], at_v0.orbits);
  }
  MonodromyRun run = track_loop(loop, start, TrackerConfig::with_seed(g.seed));
  std::cout << "loop " << run.loop.label << "\n";
  print_edge_table(run);
  std::cout << "permutation: " << cycle_notation(*run.permutation) << "\n";
  if (!g.out.empty()) {
    RunManifest man = make_manifest("monodromy", g.seed,
                                    {{"loop", loop_spec},
                                     {"threads", std::to_string(g.threads)}});
    write_text_file(g.out, monodromy_to_json(run, man));
    std::cout << "written to " << g.out << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- sample

int cmd_sample(const GlobalOpts& g, long count, const std::string& ball_path,
               double radius, bool have_radius, bool certify, const std::string& freq_path,
               const std::string& ledger_path) {
  SampleConfig cfg;
  cfg.count = count;
  cfg.seed = g.seed;
  cfg.certify = certify;
  if (!ball_path.empty() || have_radius) {
    if (ball_path.empty() || !have_radius) {
      std::cerr << "sample: --ball and --radius must be given together\n";
      return 1;
    }
    cfg.mode = SampleConfig::Mode::Ball;
    cfg.center = read_matrix_file(ball_path);
    cfg.radius = radius;
  }
  cfg.validate();

  StartSet start = bootstrap_start_set();
  BatchResult batch = run_batch(cfg, start, g.threads);

  std::map<std::string, std::string> opts = {
      {"count", std::to_string(count)},
      {"mode", cfg.mode == SampleConfig::Mode::Ball ? "ball" : "uniform"},
      {"certify", certify ? "true" : "false"},
      {"threads", std::to_string(g.threads)}};
  if (cfg.mode == SampleConfig::Mode::Ball) {
    opts["center"] = ball_path;
    opts["radius"] = format_double(radius);
  }

  std::string records = records_to_csv(batch.records);
  if (g.out.empty()) {
    std::cout << records;
  } else {
    write_text_file(g.out, records);
    write_manifest_sibling(g.out, make_manifest("sample", g.seed, opts));
  }
  if (!freq_path.empty()) {
    write_text_file(freq_path, frequency_to_csv(batch.table));
    write_manifest_sibling(freq_path, make_manifest("sample", g.seed, opts));
  }
  if (!ledger_path.empty()) {
    RealizabilityLedger ledger;
    ledger_update(ledger, batch.records);
    write_text_file(ledger_path, ledger_to_json(ledger));
    write_manifest_sibling(ledger_path, make_manifest("sample", g.seed, opts));
  }

  std::ostringstream sum;
  sum << batch.table.total << " samples: " << (batch.table.total - batch.table.failures)
      << " solved, " << batch.table.failures << " failed; n_R histogram:";
  for (const auto& [nr, c] : batch.table.by_nR) sum << " " << nr << ":" << c;
  sum << "\n";
  std::cerr << sum.str();
  return 0;
}

// ---------------------------------------------------------------- report

int cmd_report(const GlobalOpts& g, const std::string& records_path) {
  std::vector<RecordRow> rows = read_records_csv(records_path);
  long failures = 0;
  std::map<int, long> by_nR;
  std::map<TripleCount, long> by_triple;
  for (const RecordRow& r : rows) {
    if (!r.triple) {
      ++failures;
      continue;
    }
    ++by_nR[r.triple->n_real()];
    ++by_triple[*r.triple];
  }
  const long solved = long(rows.size()) - failures;

  if (rows.empty()) {
    std::cout << "no records\n";
  } else {
    std::cout << "records: " << rows.size() << " (" << solved << " solved, " << failures
              << " failed)\n\n";
    std::cout << "  n_R   count   fraction\n";
    for (int nr = 0; nr <= 10; nr += 2) {
      long c = by_nR.count(nr) ? by_nR[nr] : 0;
      std::printf("  %3d  %6ld   %.4f\n", nr, c, solved > 0 ? double(c) / double(solved) : 0.0);
    }
    std::vector<std::pair<TripleCount, long>> top(by_triple.begin(), by_triple.end());
    std::sort(top.begin(), top.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    if (top.size() > 10) top.resize(10);
    std::cout << "\n  top " << top.size() << " most frequent (n_t, n_p, n_m):\n";
    std::cout << "  rank   n_t  n_p  n_m   count   fraction\n";
    for (std::size_t i = 0; i < top.size(); ++i)
      std::printf("  %4zu   %3d  %3d  %3d  %6ld   %.4f\n", i + 1, top[i].first.n_t,
                  top[i].first.n_p, top[i].first.n_m, top[i].second,
                  double(top[i].second) / double(solved));
  }

  if (!g.out.empty()) {
    std::ostringstream csv;
    csv << "n_R,count,fraction\n";
    for (int nr = 0; nr <= 10; nr += 2) {
      long c = by_nR.count(nr) ? by_nR[nr] : 0;
      csv << nr << "," << c << ","
          << format_double(solved > 0 ? double(c) / double(solved) : 0.0) << "\n";
    }
    write_text_file(g.out, csv.str());
    write_manifest_sibling(g.out, make_manifest("report", g.seed,
                                                {{"records", records_path}}));
  }
  return 0;
}

// ---------------------------------------------------------------- admissible

int cmd_admissible(const GlobalOpts& g, bool diff) {
  std::vector<TripleCount> tuples = admissible_tuples();
  std::map<int, int> by_nR;
  for (const TripleCount& t : tuples) ++by_nR[t.n_real()];
  std::cout << tuples.size() << " admissible (n_t, n_p, n_m) tuples\n";
  std::cout << "  by n_R:";
  for (const auto& [nr, c] : by_nR) std::cout << " " << nr << ":" << c;
  std::cout << "\n";

  std::vector<TripleCount> realized;
  if (diff) {
    for (const auto& a : data::realized_tuples_reference())
      realized.push_back(TripleCount{a[0], a[1], a[2]});
    std::sort(realized.begin(), realized.end());
    std::vector<TripleCount> missing;
    for (const TripleCount& t : tuples)
      if (!std::binary_search(realized.begin(), realized.end(), t)) missing.push_back(t);
    std::cout << "  realized: " << realized.size() << ", missing: " << missing.size() << "\n";
    std::cout << "  missing tuples:";
    for (const TripleCount& t : missing) std::cout << " " << triple_str(t);
    std::cout << "\n";
  }

  if (!g.out.empty()) {
    std::ostringstream csv;
    csv << "n_t,n_p,n_m" << (diff ? ",realized" : "") << "\n";
    for (const TripleCount& t : tuples) {
      csv << t.n_t << "," << t.n_p << "," << t.n_m;
      if (diff)
        csv << "," << (std::binary_search(realized.begin(), realized.end(), t) ? "true" : "false");
      csv << "\n";
    }
    write_text_file(g.out, csv.str());
    write_manifest_sibling(g.out, make_manifest("admissible", g.seed,
                                                {{"diff", diff ? "true" : "false"}}));
  }
  return 0;
}

// ---------------------------------------------------------------- examples

int cmd_examples(const GlobalOpts& g, const std::string& suite) {
  std::vector<std::string> failures;
  auto check = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "  ok    " : "  FAIL  ") << what << "\n";
    if (!ok) failures.push_back(what);
  };

  if (suite == "totally_real") {
    StartSet start = bootstrap_start_set();
    const auto& gallery = data::census_gallery();
    for (std::size_t i = 0; i < gallery.size(); ++i) {
      const auto& entry = gallery[i];
      TripleCount want{entry.triple[0], entry.triple[1], entry.triple[2]};
      std::ostringstream label;
      label << "instance " << i << " census " << triple_str(want);
      try {
        SolveResult res = solve_at_parameter(entry.matrix, start,
                                             TrackerConfig::with_seed(g.seed), g.threads);
        if (!res.generic) {
          check(false, label.str() + ": solve non-generic: " + res.diagnostic);
          continue;
        }
        CertificationReport report = certify_census(entry.matrix, res.orbits, g.strict);
        TripleCount got = report.census_certified.value_or(TripleCount{-1, -1, -1});
        check(got == want, label.str() + " (certified " + triple_str(got) + ")");
      } catch (const Error& e) {
        check(false, label.str() + ": " + e.what());
      }
    }
  } else if (suite == "monodromy") {
    StartSet start = bootstrap_start_set();
    const auto& ref_images = data::reference_loop_permutations();
    std::vector<PermutationTen> published(2), tracked;
    for (int k = 0; k < 2; ++k) published[std::size_t(k)].images = ref_images[std::size_t(k)];
    for (int k = 1; k <= 2; ++k) {
      std::string spec = k == 1 ? "builtin:gamma1" : "builtin:gamma2";
      try {
        MonodromyRun run =
            track_loop(resolve_loop(spec), start, TrackerConfig::with_seed(g.seed));
        tracked.push_back(*run.permutation);
        check(*run.permutation == published[std::size_t(k - 1)],
              "loop gamma" + std::to_string(k) + " tracked " +
                  cycle_notation(*run.permutation) + " equals published " +
                  cycle_notation(published[std::size_t(k - 1)]));
      } catch (const Error& e) {
        check(false, "loop gamma" + std::to_string(k) + ": " + e.what());
      }
    }
    if (tracked.size() == 2) {
      std::uint64_t order = group_order(tracked);
      check(order == 3628800ull,
            "tracked permutations generate order 3628800 (got " + std::to_string(order) + ")");
    }
    std::uint64_t pub_order = group_order(published);
    check(pub_order == 3628800ull,
          "published permutations generate order 3628800 (got " + std::to_string(pub_order) +
              ")");
  } else {  // admissible
    std::vector<TripleCount> tuples = admissible_tuples();
    check(tuples.size() == 161,
          "admissible tuple count is 161 (got " + std::to_string(tuples.size()) + ")");
    std::map<int, int> by_nR;
    for (const TripleCount& t : tuples) ++by_nR[t.n_real()];
    const int expect[6] = {1, 6, 15, 28, 45, 66};
    for (int j = 0; j < 6; ++j) {
      int nr = 2 * j;
      check(by_nR[nr] == expect[j], "n_R = " + std::to_string(nr) + " has " +
                                        std::to_string(expect[j]) + " tuples (got " +
                                        std::to_string(by_nR[nr]) + ")");
    }
    std::vector<TripleCount> realized;
    for (const auto& a : data::realized_tuples_reference())
      realized.push_back(TripleCount{a[0], a[1], a[2]});
    std::sort(realized.begin(), realized.end());
    std::vector<TripleCount> missing;
    for (const TripleCount& t : tuples)
      if (!std::binary_search(realized.begin(), realized.end(), t)) missing.push_back(t);
    check(realized.size() == 128,
          "realized reference holds 128 tuples (got " + std::to_string(realized.size()) + ")");
    check(missing.size() == 33,
          "33 admissible tuples remain open (got " + std::to_string(missing.size()) + ")");
    check(std::binary_search(missing.begin(), missing.end(), TripleCount{0, 0, 10}),
          "open tuples include (0,0,10)");
  }

  if (!failures.empty()) {
    std::cout << failures.size() << " failed assertion(s):\n";
    for (const std::string& f : failures) std::cout << "  - " << f << "\n";
    return 1;
  }
  std::cout << "all assertions passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ten common secant lines of a pair of twisted cubics: "
               "solve, classify, certify, monodromy, sampling census"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  GlobalOpts g;
  app.add_option("--seed", g.seed, "random stream seed (default 0)");
  app.add_option("--threads", g.threads, "worker threads (default 1)");
  app.add_flag("--strict", g.strict, "exact rational certification arithmetic");
  app.add_option("--out", g.out, "output file (default: stdout where sensible)");

  int rc = 0;

  auto* solve = app.add_subcommand("solve", "track the 40 paths to a target matrix");
  solve->fallthrough();
  std::string solve_matrix;
  bool solve_no_gamma = false;
  solve->add_option("matrix", solve_matrix, "target matrix JSON file")->required();
  solve->add_flag("--no-gamma", solve_no_gamma, "disable the random start-system twist");
  solve->callback([&]() { rc = cmd_solve(g, solve_matrix, solve_no_gamma); });

  auto* classify = app.add_subcommand("classify", "solve and print the census CSV line");
  classify->fallthrough();
  std::string classify_matrix;
  classify->add_option("matrix", classify_matrix, "target matrix JSON file")->required();
  classify->callback([&]() { rc = cmd_classify(g, classify_matrix); });

  auto* certify = app.add_subcommand("certify", "solve and certify census, reality, distinctness");
  certify->fallthrough();
  std::string certify_matrix;
  certify->add_option("matrix", certify_matrix, "target matrix JSON file")->required();
  certify->callback([&]() { rc = cmd_certify(g, certify_matrix); });

  auto* monodromy = app.add_subcommand("monodromy", "track a triangle loop or compute group order");
  monodromy->fallthrough();
  std::string loop_spec;
  std::vector<std::string> order_perms;
  auto* loop_opt = monodromy->add_option(
      "--loop", loop_spec, "builtin:gamma1, builtin:gamma2, or a loop JSON file");
  auto* order_opt = monodromy->add_option(
      "--order", order_perms, "cycle-notation permutations; prints the generated group order");
  loop_opt->excludes(order_opt);
  monodromy->callback([&]() { rc = cmd_monodromy(g, loop_spec, order_perms); });

  auto* sample = app.add_subcommand("sample", "batch census over random parameter matrices");
  sample->fallthrough();
  long sample_count = 0;
  std::string ball_path, freq_path, ledger_path;
  double radius = 0.0;
  bool sample_certify = false;
  sample->add_option("--count", sample_count, "number of samples")->required();
  sample->add_option("--ball", ball_path, "center matrix JSON file (ball mode)");
  auto* radius_opt = sample->add_option("--radius", radius, "ball radius in (0,1)");
  sample->add_flag("--certify", sample_certify, "certify each census");
  sample->add_option("--freq", freq_path, "write triple frequency CSV here");
  sample->add_option("--ledger", ledger_path, "write realizability ledger JSON here");
  sample->callback([&]() {
    rc = cmd_sample(g, sample_count, ball_path, radius, radius_opt->count() > 0,
                    sample_certify, freq_path, ledger_path);
  });

  auto* report = app.add_subcommand("report", "histogram and top-triple table from records CSV");
  report->fallthrough();
  std::string records_path;
  report->add_option("records", records_path, "records CSV file")->required();
  report->callback([&]() { rc = cmd_report(g, records_path); });

  auto* admissible = app.add_subcommand("admissible", "enumerate admissible census tuples");
  admissible->fallthrough();
  bool diff = false;
  admissible->add_flag("--diff", diff, "diff against the realized-tuple table");
  admissible->callback([&]() { rc = cmd_admissible(g, diff); });

  auto* examples = app.add_subcommand("examples", "built-in worked-example assertion suites");
  examples->fallthrough();
  std::string suite;
  examples->add_option("--suite", suite, "totally_real, monodromy, or admissible")
      ->required()
      ->check(CLI::IsMember({"totally_real", "monodromy", "admissible"}));
  examples->callback([&]() { rc = cmd_examples(g, suite); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return error_exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
