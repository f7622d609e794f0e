// Command-line driver: verify identities, sweep over cases and seeds,
// evaluate characters, print L-factor coefficients, build Satake
// parameters, check the symmetric-algebra decomposition.
//
// Exit codes: 0 all checks pass, 1 at least one coefficient mismatch,
// 2 invalid input.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinlf/freudenthal.hpp"
#include "spinlf/identity.hpp"
#include "spinlf/lfactors.hpp"
#include "spinlf/params.hpp"
#include "spinlf/report.hpp"

namespace {

using namespace spinlf;
using ordered_json = nlohmann::ordered_json;

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rational_from_string(item));
  if (out.empty()) throw ParseError("expected a comma-separated list of rationals");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& v : parse_rational_list(text)) {
    if (v.den() != 1) throw ParseError("expected integers, got " + v.str());
    out.push_back(static_cast<int>(v.num().convert_to<long long>()));
  }
  return out;
}

RationalMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_rational_list(row));
  if (rows.empty()) throw ParseError("empty matrix literal");
  const auto cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw ParseError("ragged matrix literal");
  RationalMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

MuExponent parse_exponent(const std::string& s) {
  if (s == "half") return MuExponent::HalfTrace;
  if (s == "full") return MuExponent::FullTrace;
  throw ParseError("exponent must be 'half' or 'full'");
}

void emit(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!text.empty() && text.back() != '\n') std::cout << "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error("cannot open output file " + out_path);
    f << text;
  }
}

unsigned default_jobs() {
  if (const char* env = std::getenv("SPINOR_LFUNC_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

struct VerifyArgs {
  std::string case_name;
  int n = 0, m = 0, order = 8;
  std::optional<unsigned long long> seed;
  std::string chi0, chi, tau, a, alpha, beta, omega, sigma;
  std::string exponent = "half";
  std::string format = "json";
  std::string out;
};

VerificationReport run_one(const IdentityCase& c, const VerifyArgs& args) {
  MuExponent exp = parse_exponent(args.exponent);
  if (c.is_family_a()) {
    UnramifiedData pi, tau;
    if (args.seed && args.chi.empty()) {
      auto inst = random_identity_instance(c, *args.seed);
      pi = inst.pi;
      tau = inst.tau;
    } else {
      if (args.chi0.empty() || args.chi.empty() || args.tau.empty())
        throw ParseError("explicit runs need --chi0, --chi and --tau (or pass --seed)");
      pi.chi0 = rational_from_string(args.chi0);
      pi.chi = parse_rational_list(args.chi);
      tau.chi0 = Rational(1);
      tau.chi = parse_rational_list(args.tau);
      if (c.is_quasisplit()) {
        if (args.a.empty() || args.alpha.empty() || args.beta.empty())
          throw ParseError("quasi-split runs need --a, --alpha and --beta");
        pi.a = rational_from_string(args.a);
        pi.alpha = rational_from_string(args.alpha);
        pi.beta = rational_from_string(args.beta);
      }
    }
    return verify_unramified_identity(c, pi, tau, args.order, exp, args.seed);
  }
  UnramifiedData sigma, tau;
  if (args.seed && args.sigma.empty()) {
    auto inst = random_case_b_instance(c, *args.seed);
    sigma = inst.sigma;
    tau = inst.tau;
  } else {
    if (args.omega.empty() || args.sigma.empty() || args.tau.empty())
      throw ParseError("explicit case-B runs need --omega, --sigma and --tau (or pass --seed)");
    sigma.chi0 = rational_from_string(args.omega);
    sigma.chi = parse_rational_list(args.sigma);
    tau.chi0 = Rational(1);
    tau.chi = parse_rational_list(args.tau);
  }
  return verify_case_b_factorization(c, sigma, tau, args.order, args.seed);
}

int cmd_verify(const VerifyArgs& args) {
  IdentityCase c(identity_family_from_string(args.case_name), args.n, args.m);
  VerificationReport rep = run_one(c, args);
  emit(args.format == "text" ? render_text(rep) : render_json(rep), args.out);
  return rep.pass ? 0 : 1;
}

struct SweepArgs {
  std::vector<std::string> cases;
  std::string shapes;  // "1x1,2x3"; empty = per-case defaults
  int seeds = 10;
  unsigned long long seed_base = 1;
  int order = 8;
  unsigned jobs = 0;
  std::string exponent = "half";
  std::string format = "json";
  std::string out;
};

std::vector<std::pair<int, int>> default_shapes(IdentityFamily f) {
  switch (f) {
    case IdentityFamily::AOdd: return {{1, 1}, {1, 2}, {2, 2}, {2, 3}};
    case IdentityFamily::AEvenSplit:
    case IdentityFamily::AEvenQuasiSplit:
    case IdentityFamily::BOdd: return {{1, 2}, {2, 3}};
    case IdentityFamily::BEvenSplit: return {{1, 1}, {2, 2}};
    case IdentityFamily::BEvenQuasiSplit: return {};
  }
  return {};
}

std::vector<std::pair<int, int>> parse_shapes(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto x = item.find('x');
    if (x == std::string::npos) throw ParseError("shape must look like 2x3");
    out.emplace_back(std::stoi(item.substr(0, x)), std::stoi(item.substr(x + 1)));
  }
  if (out.empty()) throw ParseError("empty shape list");
  return out;
}

int cmd_sweep(const SweepArgs& args) {
  struct Task {
    std::string key;
    IdentityCase c;
    unsigned long long seed;
  };
  std::vector<Task> tasks;
  std::vector<std::string> case_names = args.cases;
  if (case_names.empty())
    case_names = {"a-odd", "a-even-split", "a-even-quasisplit", "b-odd", "b-even-split"};
  for (const auto& name : case_names) {
    IdentityFamily fam = identity_family_from_string(name);
    auto shapes = args.shapes.empty() ? default_shapes(fam) : parse_shapes(args.shapes);
    if (shapes.empty()) throw ParseError("no shapes for case " + name);
    for (auto [n, m] : shapes) {
      IdentityCase c(fam, n, m);
      for (int s = 0; s < args.seeds; ++s) {
        unsigned long long seed = args.seed_base + static_cast<unsigned long long>(s);
        std::ostringstream key;
        key << c.name() << " n=" << n << " m=" << m << " seed=";
        key.fill('0');
        key.width(6);
        key << seed;
        tasks.push_back({key.str(), c, seed});
      }
    }
  }

  MuExponent exp = parse_exponent(args.exponent);
  std::vector<VerificationReport> results(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      try {
        if (t.c.is_family_a()) {
          auto inst = random_identity_instance(t.c, t.seed);
          results[i] = verify_unramified_identity(t.c, inst.pi, inst.tau, args.order, exp, t.seed);
        } else {
          auto inst = random_case_b_instance(t.c, t.seed);
          results[i] = verify_case_b_factorization(t.c, inst.sigma, inst.tau, args.order, t.seed);
        }
      } catch (const std::exception& e) {
        VerificationReport rep;
        rep.kind = "error";
        rep.case_name = t.c.name();
        rep.n = t.c.n();
        rep.m = t.c.m();
        rep.order = args.order;
        rep.seed = t.seed;
        rep.primary = "none";
        rep.pass = false;
        rep.notes.push_back(std::string("exception: ") + e.what());
        results[i] = std::move(rep);
      }
    }
  };
  unsigned jobs = args.jobs > 0 ? args.jobs : default_jobs();
  if (jobs > tasks.size()) jobs = static_cast<unsigned>(tasks.size());
  std::vector<std::thread> pool;
  for (unsigned j = 0; j + 1 < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  SweepReport sweep;
  sweep.all_pass = true;
  for (size_t i = 0; i < tasks.size(); ++i) {
    if (!results[i].pass) sweep.all_pass = false;
    sweep.runs.emplace_back(tasks[i].key, std::move(results[i]));
  }
  std::sort(sweep.runs.begin(), sweep.runs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  emit(args.format == "text" ? render_text(sweep) : render_json(sweep), args.out);
  return sweep.all_pass ? 0 : 1;
}

struct CharArgs {
  std::string group;
  int rank = 0;
  std::string weight, point, mu;
  std::string exponent = "half";
  bool oracle = false;
};

int cmd_char(const CharArgs& args) {
  DominantWeight w(parse_int_list(args.weight));
  auto x = parse_rational_list(args.point);
  if (args.rank > 0 && static_cast<int>(x.size()) != args.rank)
    throw ParseError("--point must list exactly --rank values");
  Rational value;
  if (args.group == "gl") {
    value = args.oracle ? freudenthal_char(ClassicalFamily::GL, w, x) : schur_gl(w, x);
  } else if (args.group == "sp") {
    value = args.oracle ? freudenthal_char(ClassicalFamily::Sp, w.padded(static_cast<int>(x.size())), x)
                        : char_sp(w, x);
  } else if (args.group == "so-even") {
    value = args.oracle
                ? freudenthal_char(ClassicalFamily::SOeven, w.padded(static_cast<int>(x.size())), x)
                : char_so_even(w, x);
  } else if (args.group == "gsp" || args.group == "gso") {
    if (args.mu.empty()) throw ParseError("similitude characters need --mu");
    value = similitude_char(args.group == "gsp" ? SimilitudeFamily::GSp : SimilitudeFamily::GSO, w,
                            x, rational_from_string(args.mu), parse_exponent(args.exponent));
  } else {
    throw ParseError("--group must be one of gl, sp, so-even, gsp, gso");
  }
  std::cout << value.str() << "\n";
  return 0;
}

int cmd_lfactor(const std::string& matrix, int order) {
  Series l = det_one_minus_mt(parse_matrix(matrix), order).inverse();
  for (int i = 0; i <= order; ++i) std::cout << (i ? ", " : "") << l[i].str();
  std::cout << "\n";
  return 0;
}

ordered_json parameter_json(const SatakeParameter& p) {
  ordered_json j;
  j["kind"] = p.kind.str();
  j["dim"] = p.dim();
  j["mu"] = p.mu.str();
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < p.matrix.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index k = 0; k < p.matrix.cols(); ++k) row.push_back(p.matrix(i, k).str());
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  if (p.diag_eigenvalues) {
    ordered_json d = ordered_json::array();
    for (const auto& v : *p.diag_eigenvalues) d.push_back(v.str());
    j["diagonal"] = std::move(d);
  }
  return j;
}

struct SatakeArgs {
  std::string family;
  std::string chi0 = "1", chi, a, alpha, beta;
  std::string out;
};

int cmd_satake(const SatakeArgs& args) {
  UnramifiedData data;
  data.chi0 = rational_from_string(args.chi0);
  if (!args.chi.empty()) data.chi = parse_rational_list(args.chi);
  ordered_json j;
  j["schema"] = 1;
  if (args.family == "gl") {
    j["parameter"] = parameter_json(satake_gl(data.chi));
  } else if (args.family == "odd") {
    j["parameter"] = parameter_json(satake_gspin_odd(data));
  } else if (args.family == "even-split") {
    j["parameter"] = parameter_json(satake_gspin_even_split(data));
  } else if (args.family == "quasisplit") {
    if (args.a.empty() || args.alpha.empty() || args.beta.empty())
      throw ParseError("quasi-split parameters need --a, --alpha and --beta");
    data.a = rational_from_string(args.a);
    data.alpha = rational_from_string(args.alpha);
    data.beta = rational_from_string(args.beta);
    auto [full, reduced] = satake_quasisplit(data);
    j["parameter"] = parameter_json(full);
    j["reduced"] = parameter_json(reduced);
    if (is_square(*data.a))
      j["warning"] = "a is a rational square; the form is isotropic and the parameter degenerates "
                     "to the split case";
  } else {
    throw ParseError("--family must be one of gl, odd, even-split, quasisplit");
  }
  j["membership"] = "ok";
  emit(j.dump(2), args.out);
  return 0;
}

struct SymalgArgs {
  std::string family;
  int m = 1, n = 1, r = 4;
  std::optional<unsigned long long> seed;
  std::string t, mu, g2;
  std::string format = "json";
  std::string out;
};

int cmd_symalg(const SymalgArgs& args) {
  SimilitudeFamily fam;
  if (args.family == "gsp") {
    fam = SimilitudeFamily::GSp;
  } else if (args.family == "gso") {
    fam = SimilitudeFamily::GSO;
  } else {
    throw ParseError("--family must be gsp or gso");
  }
  VerificationReport rep;
  if (args.seed && args.t.empty()) {
    rep = verify_symalg(random_symalg_instance(fam, args.m, args.n, args.r, *args.seed),
                        *args.seed);
  } else {
    if (args.t.empty() || args.mu.empty() || args.g2.empty())
      throw ParseError("explicit runs need --t, --mu and --g2 (or pass --seed)");
    SymAlgInstance inst(fam, parse_rational_list(args.t), rational_from_string(args.mu),
                        parse_rational_list(args.g2), args.r);
    rep = verify_symalg(inst, args.seed);
  }
  emit(args.format == "text" ? render_text(rep) : render_json(rep), args.out);
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of unramified Rankin-Selberg identities for GSpin x GL"};
  app.require_subcommand(1);

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "verify one identity instance");
  verify->add_option("--case", vargs.case_name, "a-odd, a-even-split, a-even-quasisplit, b-odd, b-even-split")->required();
  verify->add_option("--n", vargs.n, "GL rank n")->required();
  verify->add_option("--m", vargs.m, "GSpin-side rank m")->required();
  verify->add_option("--order", vargs.order, "truncation order (default 8)");
  verify->add_option("--seed", vargs.seed, "seed for generated parameters");
  verify->add_option("--chi0", vargs.chi0, "central value chi_0 (explicit mode)");
  verify->add_option("--chi", vargs.chi, "comma-separated chi values (explicit mode)");
  verify->add_option("--tau", vargs.tau, "comma-separated tau values (explicit mode)");
  verify->add_option("--a", vargs.a, "quasi-split square class a");
  verify->add_option("--alpha", vargs.alpha, "quasi-split alpha");
  verify->add_option("--beta", vargs.beta, "quasi-split beta");
  verify->add_option("--omega", vargs.omega, "case-B central twist omega");
  verify->add_option("--sigma", vargs.sigma, "case-B GL_n values sigma");
  verify->add_option("--exponent", vargs.exponent, "similitude exponent: half (default) or full");
  verify->add_option("--format", vargs.format, "json (default) or text");
  verify->add_option("--out", vargs.out, "also write the report to this file");

  SweepArgs sargs;
  auto* sweep = app.add_subcommand("sweep", "grid of verifications over cases, shapes and seeds");
  sweep->add_option("--case", sargs.cases, "cases to run (repeatable; default: all supported)");
  sweep->add_option("--shapes", sargs.shapes, "comma-separated n x m shapes, e.g. 1x2,2x3");
  sweep->add_option("--seeds", sargs.seeds, "number of seeds per shape (default 10)");
  sweep->add_option("--seed-base", sargs.seed_base, "first seed value (default 1)");
  sweep->add_option("--order", sargs.order, "truncation order (default 8)");
  sweep->add_option("--jobs", sargs.jobs, "worker threads (default: SPINOR_LFUNC_JOBS or cores)");
  sweep->add_option("--exponent", sargs.exponent, "similitude exponent: half (default) or full");
  sweep->add_option("--format", sargs.format, "json (default) or text");
  sweep->add_option("--out", sargs.out, "also write the report to this file");

  CharArgs cargs;
  auto* chr = app.add_subcommand("char", "evaluate one character value");
  chr->add_option("--group", cargs.group, "gl, sp, so-even, gsp, gso")->required();
  chr->add_option("--rank", cargs.rank, "rank (checked against --point length)");
  chr->add_option("--weight", cargs.weight, "comma-separated weight parts")->required();
  chr->add_option("--point", cargs.point, "comma-separated evaluation point")->required();
  chr->add_option("--mu", cargs.mu, "similitude value for gsp/gso");
  chr->add_option("--exponent", cargs.exponent, "similitude exponent: half (default) or full");
  chr->add_flag("--oracle", cargs.oracle, "use the weight-multiplicity oracle instead of alternants");

  std::string lf_matrix;
  int lf_order = 8;
  auto* lf = app.add_subcommand("lfactor", "print L-factor coefficients det(I - MT)^{-1}");
  lf->add_option("--matrix", lf_matrix, "matrix literal, rows ';', entries ','")->required();
  lf->add_option("--order", lf_order, "truncation order (default 8)");

  SatakeArgs skargs;
  auto* sk = app.add_subcommand("satake", "build and validate a Satake parameter");
  sk->add_option("--family", skargs.family, "gl, odd, even-split, quasisplit")->required();
  sk->add_option("--chi0", skargs.chi0, "central value chi_0 (default 1)");
  sk->add_option("--chi", skargs.chi, "comma-separated chi values");
  sk->add_option("--a", skargs.a, "quasi-split square class a");
  sk->add_option("--alpha", skargs.alpha, "quasi-split alpha");
  sk->add_option("--beta", skargs.beta, "quasi-split beta");
  sk->add_option("--out", skargs.out, "also write the JSON to this file");

  SymalgArgs syargs;
  auto* sy = app.add_subcommand("symalg", "check the symmetric-algebra decomposition");
  sy->add_option("--family", syargs.family, "gsp or gso")->required();
  sy->add_option("--m", syargs.m, "similitude block rank m")->required();
  sy->add_option("--n", syargs.n, "GL rank n")->required();
  sy->add_option("--r", syargs.r, "top symmetric power degree (default 4)");
  sy->add_option("--seed", syargs.seed, "seed for generated parameters");
  sy->add_option("--t", syargs.t, "comma-separated torus values (explicit mode)");
  sy->add_option("--mu", syargs.mu, "similitude value (explicit mode)");
  sy->add_option("--g2", syargs.g2, "comma-separated GL values (explicit mode)");
  sy->add_option("--format", syargs.format, "json (default) or text");
  sy->add_option("--out", syargs.out, "also write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(vargs);
    if (*sweep) return cmd_sweep(sargs);
    if (*chr) return cmd_char(cargs);
    if (*lf) return cmd_lfactor(lf_matrix, lf_order);
    if (*sk) return cmd_satake(skargs);
    if (*sy) return cmd_symalg(syargs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
