// judicious: command-line front end.
//   judicious partition --gen sec6-d4 --n 20 --d 4
//   judicious oracle --input tri.el
//   judicious gen star-triangle --n 6 -o s.el
// Exit codes: 0 ok, 2 bad input, 3 resource limit hit.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "judicious/judicious.hpp"
#include "judicious/serialize.hpp"

namespace jd = judicious;
using jd::json;

namespace {

struct InputOpts {
  std::string input;
  std::string gen;
  std::size_t n = 0;
  std::size_t q = 0;
  std::size_t copies = 1;
  bool augment = false;
  std::size_t extra = 0;
};

struct Common {
  InputOpts in;
  jd::EngineConfig cfg;
  bool json_out = false;
  std::string x_file;
  bool x_auto = false;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string canonical_family(const std::string& raw) {
  const std::string f = lower(raw);
  if (f == "eulerian" || f == "eulerian-odd-clique") return "eulerian";
  if (f == "tight-extremal") return "tight-extremal";
  if (f == "star-triangle") return "star-triangle";
  if (f == "sec6-d4") return "sec6-d4";
  if (f == "sec6-d6") return "sec6-d6";
  if (f == "random-minout" || f == "random") return "random-minout";
  throw jd::Error(jd::ErrorKind::InvalidConfig, "unknown generator family '" + raw + "'");
}

jd::Digraph generate(const std::string& family, const InputOpts& in, std::size_t d, std::uint64_t seed) {
  if (family == "eulerian") return jd::gen_eulerian_complete(in.q != 0 ? in.q : in.n);
  if (family == "tight-extremal") return jd::gen_tight_extremal(d, in.copies, in.augment);
  if (family == "star-triangle") return jd::gen_star_triangle(in.n);
  if (family == "sec6-d4") return jd::gen_sec6_d4(in.n);
  if (family == "sec6-d6") return jd::gen_sec6_d6(in.n, seed);
  return jd::gen_random_minout(in.n, d, in.extra, seed);
}

struct Loaded {
  jd::Digraph graph;
  json descriptor;
};

Loaded load(const Common& c) {
  if (!c.in.input.empty() && !c.in.gen.empty()) {
    throw jd::Error(jd::ErrorKind::InvalidConfig, "give either --input or --gen, not both");
  }
  if (!c.in.input.empty()) return {jd::read_edge_list_file(c.in.input), json{{"file", c.in.input}}};
  if (c.in.gen.empty()) throw jd::Error(jd::ErrorKind::InvalidConfig, "one of --input or --gen is required");
  const auto fam = canonical_family(c.in.gen);
  json desc{{"generator", fam}, {"n", c.in.n}, {"q", c.in.q}, {"d", c.cfg.d},
            {"copies", c.in.copies}, {"augment", c.in.augment}, {"extra", c.in.extra}, {"seed", c.cfg.seed}};
  return {generate(fam, c.in, static_cast<std::size_t>(c.cfg.d), c.cfg.seed), desc};
}

void add_input(CLI::App* app, Common& c) {
  app->add_option("--input,-i", c.in.input, "edge-list file");
  app->add_option("--gen", c.in.gen, "generator family instead of a file");
  app->add_option("--n", c.in.n, "generator: vertex count");
  app->add_option("--q", c.in.q, "eulerian: clique order");
  app->add_option("--copies", c.in.copies, "tight-extremal: small cliques");
  app->add_flag("--augment", c.in.augment, "tight-extremal: wire small cliques into the big one");
  app->add_option("--extra", c.in.extra, "random-minout: extra arcs");
  app->add_option("--seed", c.cfg.seed, "seed for generators and the engine");
  app->add_flag("--json", c.json_out, "machine-readable output");
}

void add_engine(CLI::App* app, Common& c) {
  app->add_option("--d", c.cfg.d, "minimum outdegree assumed");
  app->add_option("--eps", c.cfg.epsilon, "epsilon");
  app->add_option("--trials", c.cfg.trials, "random extensions per candidate");
  app->add_option("--threads", c.cfg.threads, "worker threads (output is identical)");
  app->add_option("--rounds", c.cfg.local_improve_rounds, "hill-climbing sweeps per trial");
  app->add_flag_callback("--no-baseline", [&c] { c.cfg.baseline_run = false; }, "skip the X-empty fallback run");
}

void add_x(CLI::App* app, Common& c) {
  auto* xf = app->add_option("--x-file", c.x_file, "file listing X, one id per line");
  app->add_flag("--x-auto", c.x_auto, "X = {v : d(v) >= n^0.75}")->excludes(xf);
}

jd::VertexSet resolve_x(const Common& c, const jd::Digraph& d) {
  if (!c.x_file.empty()) return jd::read_vertex_list_file(c.x_file, d.vertex_count());
  if (c.x_auto) return jd::split_by_degree(d, c.cfg).x;
  return {};
}

void emit(const Common& c, const std::string& command, const json& input, const json& outcome,
          double wall_ms, const std::string& human) {
  if (c.json_out) {
    json rec{{"command", command},
             {"input", input},
             {"config", c.cfg},
             {"outcome", outcome},
             {"wall_time_ms", wall_ms},
             {"version", jd::kVersion}};
    std::cout << rec.dump(2) << '\n';
  } else {
    std::cout << human;
  }
}

std::string fmt_set(const jd::VertexSet& s) {
  std::ostringstream o;
  o << '{';
  for (std::size_t i = 0; i < s.size(); ++i) o << (i ? "," : "") << s[i];
  o << '}';
  return o.str();
}

std::string fmt_certificate(const jd::Certificate& cert) {
  std::ostringstream o;
  o << "certificate\n";
  for (const auto& ch : cert.checks) {
    o << "  " << (ch.holds ? "ok   " : "FAIL ") << std::left << std::setw(26) << ch.id << ' '
      << jd::rational_str(ch.lhs) << ' ' << jd::to_string(ch.cmp) << ' ' << jd::rational_str(ch.rhs) << '\n';
  }
  for (const auto& v : cert.fh_values) {
    o << "  f/h " << std::left << std::setw(12) << jd::to_string(v.label) << " p=" << jd::rational_str(v.p)
      << "  f=" << jd::to_double(v.f) << "  h=" << jd::to_double(v.h) << '\n';
  }
  for (const auto& n : cert.notes) o << "  note: " << n << '\n';
  return o.str();
}

using Clock = std::chrono::steady_clock;
double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int run_partition(Common& c, bool certify) {
  const auto t0 = Clock::now();
  auto [g, desc] = load(c);
  const auto out = jd::partition(g, c.cfg);
  const double ms = ms_since(t0);
  std::ostringstream h;
  for (const auto& w : out.warnings) std::cerr << "warning: " << w << '\n';
  h << "n " << g.vertex_count() << "  m " << g.arc_count() << '\n'
    << "e12 " << out.cut.e12 << "  e21 " << out.cut.e21 << "  min " << out.cut.minval << '\n'
    << "ratio " << out.ratio << '\n'
    << "guarantee target " << jd::rational_str(out.guarantee_target) << " = " << jd::to_double(out.guarantee_target)
    << "  (d = " << out.d_used << ")\n"
    << "candidate " << jd::to_string(out.candidate_used) << "  p = " << jd::rational_str(out.candidate_p) << '\n'
    << "X " << fmt_set(out.split.x) << (out.shortcut_used ? "  (dense shortcut)" : "") << '\n';
  if (certify) h << fmt_certificate(out.certificate);
  json oj = out;
  if (!certify) oj.erase("certificate");
  emit(c, "partition", desc, oj, ms, h.str());
  return 0;
}

int run_oracle(Common& c, std::size_t limit) {
  const auto t0 = Clock::now();
  auto [g, desc] = load(c);
  const auto r = jd::exact_max_min_cut(g, limit);
  std::ostringstream h;
  h << "optimum " << r.optimum << '\n'
    << "witness V1 " << fmt_set(r.witness.members(jd::Side::One)) << "  V2 " << fmt_set(r.witness.members(jd::Side::Two))
    << '\n'
    << "evaluated " << r.evaluated << '\n';
  emit(c, "oracle", desc, r, ms_since(t0), h.str());
  return 0;
}

int run_gap(Common& c) {
  const auto t0 = Clock::now();
  auto [g, desc] = load(c);
  const auto x = resolve_x(c, g);
  const auto y = jd::complement(g.vertex_count(), x);
  const auto r = jd::min_gap_partition(g, x, y, {c.cfg.exhaustive_x_limit, c.cfg.dp_state_limit});
  std::ostringstream h;
  h << "X1 " << fmt_set(r.x1) << "  X2 " << fmt_set(r.x2) << '\n'
    << "theta " << r.theta << "  |theta| min " << r.theta_abs_min << (r.exhaustive ? "  (exhaustive)" : "") << '\n'
    << "huge " << fmt_set(r.huge) << "  k " << (r.k ? std::to_string(*r.k) : "-") << '\n'
    << "g " << r.g << "  b " << r.b << '\n';
  desc["x"] = x;
  emit(c, "gap", desc, r, ms_since(t0), h.str());
  return 0;
}

int run_tight(Common& c) {
  const auto t0 = Clock::now();
  auto [g, desc] = load(c);
  const auto x = resolve_x(c, g);
  const auto y = jd::complement(g.vertex_count(), x);
  const auto r = jd::essential_tight_components(g, y);
  std::ostringstream h;
  h << "tau " << r.tau << '\n';
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    h << "  " << fmt_set(r.components[i]) << (r.tight_flags[i] ? " tight" : "")
      << (r.essential_flags[i] ? " essential" : "") << '\n';
  }
  desc["x"] = x;
  emit(c, "tight", desc, r, ms_since(t0), h.str());
  return 0;
}

int run_certify(Common& c) {
  const auto t0 = Clock::now();
  auto [g, desc] = load(c);
  const auto x = resolve_x(c, g);
  const auto y = jd::complement(g.vertex_count(), x);
  const auto gr = jd::min_gap_partition(g, x, y, {c.cfg.exhaustive_x_limit, c.cfg.dp_state_limit});
  const auto tr = jd::essential_tight_components(g, y);
  std::vector<jd::CandidateXPartition> cands;
  try {
    cands = jd::candidate_x_partitions(g, x, gr, c.cfg.d);
  } catch (const jd::Error& e) {
    if (e.kind() != jd::ErrorKind::HugeSetEven) throw;
    cands = {jd::mingap_candidate(gr)};
  }
  const auto cert = jd::build_certificate(g, x, y, gr, tr, c.cfg.d, c.cfg.epsilon, cands);
  desc["x"] = x;
  emit(c, "certify", desc, cert, ms_since(t0), fmt_certificate(cert));
  return 0;
}

int run_gen(Common& c, const std::string& family_raw, const std::string& out_path) {
  const auto fam = canonical_family(family_raw);
  const auto g = generate(fam, c.in, static_cast<std::size_t>(c.cfg.d), c.cfg.seed);
  json props{{"family", fam},
             {"n", g.vertex_count()},
             {"m", g.arc_count()},
             {"min_outdegree", jd::min_outdegree(g)},
             {"eulerian", jd::is_eulerian(g)},
             {"seed", c.cfg.seed}};
  if (out_path.empty()) {
    jd::write_edge_list(std::cout, g);
    std::cerr << props.dump() << '\n';
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) throw jd::Error(jd::ErrorKind::ParseError, "cannot write '" + out_path + "'");
  jd::write_edge_list(f, g);
  std::ofstream pf(out_path + ".props.json");
  pf << props.dump(2) << '\n';
  if (c.json_out) {
    std::cout << props.dump(2) << '\n';
  } else {
    std::cout << "wrote " << out_path << "  n " << g.vertex_count() << "  m " << g.arc_count()
              << "  min outdegree " << jd::min_outdegree(g) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Judicious bipartitions of digraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(jd::kVersion));

  Common c;
  bool certify = false;
  std::size_t limit = 24;
  std::string family;
  std::string out_path;

  auto* part = app.add_subcommand("partition", "run the partition engine");
  add_input(part, c);
  add_engine(part, c);
  part->add_flag("--certify", certify, "print the certificate");

  auto* orc = app.add_subcommand("oracle", "exact max-min cut by enumeration");
  add_input(orc, c);
  orc->add_option("--limit", limit, "largest n enumerated");

  auto* gap = app.add_subcommand("gap", "minimum-gap partition of X");
  add_input(gap, c);
  add_x(gap, c);
  add_engine(gap, c);

  auto* tight = app.add_subcommand("tight", "tight components of D[V \\ X]");
  add_input(tight, c);
  add_x(tight, c);
  add_engine(tight, c);

  auto* cert = app.add_subcommand("certify", "inequality certificate for an X split");
  add_input(cert, c);
  add_x(cert, c);
  add_engine(cert, c);

  auto* gen = app.add_subcommand("gen", "write a generated instance as an edge list");
  gen->add_option("family", family, "eulerian | tight-extremal | star-triangle | sec6-d4 | sec6-d6 | random-minout")
      ->required();
  add_input(gen, c);
  add_engine(gen, c);
  gen->add_option("-o,--output", out_path, "output file (a .props.json sidecar is written next to it)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    c.cfg.validate();
    if (*part) return run_partition(c, certify);
    if (*orc) return run_oracle(c, limit);
    if (*gap) return run_gap(c);
    if (*tight) return run_tight(c);
    if (*cert) return run_certify(c);
    if (*gen) return run_gen(c, family, out_path);
  } catch (const jd::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return jd::is_resource_limit(e.kind()) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
