// Command-line interface: structure checks on user-supplied algebras, the
// built-in families and models, branch certificates, and parameter sweeps.
// All exact computation uses the rational backend; reports are JSON on
// stdout, sweeps are CSV.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lie4/almost_hermitian.hpp"
#include "lie4/classification.hpp"
#include "lie4/curvature.hpp"
#include "lie4/kowalski.hpp"
#include "lie4/lie_algebra.hpp"
#include "lie4/models.hpp"

using nlohmann::json;
using namespace lie4;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitResidual = 1;
constexpr int kExitParse = 2;
constexpr int kExitJacobi = 3;
constexpr int kExitDomain = 4;

// ---------------------------------------------------------------------------
// serialization

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

json rat_json(const Rational& r) { return rational_to_string(r); }

Rational rat_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational values must be strings like \"p/q\"");
  return parse_rational(j.get<std::string>());
}

json mat4_json(const Mat4<Rational>& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(rat_json(x));
    rows.push_back(r);
  }
  return rows;
}

Mat4<Rational> mat4_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("expected a 4x4 array");
  Mat4<Rational> m;
  for (int i = 0; i < 4; ++i) {
    if (!j[i].is_array() || j[i].size() != 4) throw std::invalid_argument("expected a 4x4 array");
    for (int k = 0; k < 4; ++k) m[i][k] = rat_from_json(j[i][k]);
  }
  return m;
}

json vec4_json(const Vec4<Rational>& v) {
  json r = json::array();
  for (const auto& x : v) r.push_back(rat_json(x));
  return r;
}

// ---------------------------------------------------------------------------
// input files

struct AlgebraInput {
  LieAlgebra4<Rational> alg;
  Mat4<Rational> metric = identity_mat4<Rational>();
  std::optional<Mat4<Rational>> J;
  std::optional<TwoForm<Rational>> omega;
};

AlgebraInput parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j = json::parse(in);

  bool has_sc = j.contains("structure_constants");
  bool has_cf = j.contains("coframe_d");
  if (has_sc == has_cf)
    throw std::invalid_argument("exactly one of structure_constants / coframe_d is required");

  AlgebraInput out;
  if (has_sc) {
    for (const auto& e : j["structure_constants"]) {
      int i = e.at("i").get<int>(), jj = e.at("j").get<int>(), k = e.at("k").get<int>();
      if (i < 1 || i > 4 || jj < 1 || jj > 4 || k < 1 || k > 4 || i >= jj)
        throw std::invalid_argument("structure constant indices must satisfy 1 <= i < j <= 4, 1 <= k <= 4");
      out.alg.set_bracket(i - 1, jj - 1, k - 1, rat_from_json(e.at("value")));
    }
  } else {
    const json& cf = j["coframe_d"];
    if (!cf.is_array() || cf.size() != 4) throw std::invalid_argument("coframe_d must be 4 rows");
    CoframeDiff<Rational> d;
    for (int k = 0; k < 4; ++k) {
      if (!cf[k].is_array() || cf[k].size() != 6)
        throw std::invalid_argument("each coframe_d row needs 6 entries (order 12,13,14,23,24,34)");
      for (int A = 0; A < 6; ++A) d.d[k].c[A] = rat_from_json(cf[k][A]);
    }
    out.alg = from_coframe(d);
  }
  if (j.contains("metric")) out.metric = mat4_from_json(j["metric"]);
  if (j.contains("J")) out.J = mat4_from_json(j["J"]);
  if (j.contains("omega")) {
    const json& w = j["omega"];
    if (!w.is_array() || w.size() != 6)
      throw std::invalid_argument("omega needs 6 entries (order 12,13,14,23,24,34)");
    TwoForm<Rational> om;
    for (int A = 0; A < 6; ++A) om.c[A] = rat_from_json(w[A]);
    out.omega = om;
  }
  return out;
}

// ---------------------------------------------------------------------------
// check

/// Floating-point rendering of the same checks: residual norms against a
/// fixed tolerance instead of literal zeros.
int run_check_float(const AlgebraInput& in) {
  constexpr double kTol = 1e-9;
  auto conv_mat = [](const Mat4<Rational>& m) {
    Mat4<double> r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r[i][j] = scalar_to_double(m[i][j]);
    return r;
  };
  LieAlgebra4<double> alg;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        alg.set_bracket(i, j, k, scalar_to_double(in.alg.c(k, i, j)));

  json rep;
  rep["backend"] = "float";
  auto jd = jacobi_defect(alg);
  double jnorm = scalar_to_double(jacobi_defect_norm(jd));
  rep["jacobi_norm"] = fmt_double(jnorm);
  rep["jacobi_zero"] = jnorm <= kTol;
  bool all_zero = jnorm <= kTol;

  bool curvature_requested = in.J.has_value() || in.omega.has_value();
  if (curvature_requested) {
    if (jnorm > kTol) {
      rep["error"] = "Jacobi identity fails; curvature-level checks skipped";
      std::cout << rep.dump(2) << "\n";
      return kExitJacobi;
    }
    MetricLieAlgebra<double> m{alg, conv_mat(in.metric)};
    CurvatureData<double> cd = curvature_unchecked(m);
    rep["scal"] = fmt_double(cd.scal);
    if (in.J) {
      auto rinv = ricci_j_invariance(cd.ricci, conv_mat(*in.J));
      double rnorm = mat4_max_abs(rinv.residual);
      rep["ricci_j_invariance_norm"] = fmt_double(rnorm);
      if (rnorm > kTol) all_zero = false;
    }
  }
  rep["all_zero"] = all_zero;
  std::cout << rep.dump(2) << "\n";
  return all_zero ? kExitOk : kExitResidual;
}

int run_check(const AlgebraInput& in, bool use_float) {
  if (use_float) return run_check_float(in);
  json rep;
  bool all_zero = true;

  auto jd = jacobi_defect(in.alg);
  rep["jacobi_zero"] = jd.is_zero;
  if (!jd.is_zero) {
    all_zero = false;
    json bad = json::array();
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k)
          if (!vec4_is_zero(jd.residual[i][j][k]))
            bad.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1},
                           {"residual", vec4_json(jd.residual[i][j][k])}});
    rep["jacobi_failures"] = bad;
  }

  auto sp = solvability_profile(in.alg);
  rep["derived_dims"] = sp.derived_dims;
  rep["is_solvable"] = sp.is_solvable;
  rep["commutator_dim"] = sp.commutator_dim;

  auto um = unimodularity(in.alg);
  rep["is_unimodular"] = um.is_unimodular;
  rep["ad_traces"] = vec4_json(um.ad_traces);

  bool curvature_requested = in.J.has_value() || in.omega.has_value();
  if (curvature_requested) {
    if (!jd.is_zero) {
      rep["error"] = "Jacobi identity fails; curvature-level checks skipped";
      std::cout << rep.dump(2) << "\n";
      return kExitJacobi;
    }
    AlmostHermitian4<Rational> ah = AlmostHermitian4<Rational>::standard(in.alg);
    ah.m.g = in.metric;
    if (in.J) ah.J = *in.J;
    if (in.omega) ah.omega = *in.omega;

    auto st = check_structure(ah);
    rep["structure_all_zero"] = st.all_zero();
    rep["d_omega_zero"] = st.d_omega.is_zero();
    if (!st.all_zero()) all_zero = false;

    auto nij = nijenhuis(in.alg, ah.J);
    rep["nijenhuis_zero"] = nij.is_zero;

    CurvatureData<Rational> cd = curvature(ah.m);
    rep["ricci"] = mat4_json(cd.ricci);
    rep["scal"] = rat_json(cd.scal);

    auto rinv = ricci_j_invariance(cd.ricci, ah.J);
    rep["ricci_j_invariant"] = rinv.is_zero;
    if (!rinv.is_zero) all_zero = false;

    if (mat4_is_zero(mat4_sub(ah.m.g, identity_mat4<Rational>()))) {
      auto wb = weyl_decompose(ah);
      rep["w1"] = rat_json(wb.w1);
      rep["w2_zero"] = wb.w2_zero;
      rep["w3_zero"] = wb.w3_zero;
      auto defects = gray_condition_defects(cd.riem, ah.J);
      rep["gray_defects"] = {rat_json(riem4_max_abs(defects[0])),
                             rat_json(riem4_max_abs(defects[1])),
                             rat_json(riem4_max_abs(defects[2]))};
    } else {
      rep["weyl_skipped"] = "orthonormal frame required";
    }
  }

  rep["backend"] = "exact";
  rep["all_zero"] = all_zero && jd.is_zero;
  std::cout << rep.dump(2) << "\n";
  return rep["all_zero"].get<bool>() ? kExitOk : kExitResidual;
}

// ---------------------------------------------------------------------------
// family

int run_family(const Rational& s, const Rational& t) {
  if (t == 0) {
    std::cerr << "family: t must be nonzero\n";
    return kExitDomain;
  }
  AlmostHermitian4<Rational> ah = AlmostHermitian4<Rational>::standard(family_algebra(s, t));
  CurvatureData<Rational> cd = curvature(ah.m);
  json rep;
  rep["s"] = rat_json(s);
  rep["t"] = rat_json(t);
  rep["ricci"] = mat4_json(cd.ricci);
  rep["scal"] = rat_json(cd.scal);
  rep["curvature"] = {{"R1212", rat_json(cd.riem[0][1][0][1])},
                      {"R1234", rat_json(cd.riem[0][1][2][3])},
                      {"R3412", rat_json(cd.riem[2][3][0][1])},
                      {"R3434", rat_json(cd.riem[2][3][2][3])}};
  auto wb = weyl_decompose(ah);
  rep["w2_zero"] = wb.w2_zero;
  rep["w3_zero"] = wb.w3_zero;
  auto defects = gray_condition_defects(cd.riem, ah.J);
  rep["g2_residual"] = rat_json(riem4_max_abs(defects[1]));
  rep["nijenhuis_zero"] = nijenhuis(ah.m.alg, ah.J).is_zero;
  rep["ricci_j_invariant"] = ricci_j_invariance(cd.ricci, ah.J).is_zero;
  rep["trace_ad_e4"] = rat_json(unimodularity(ah.m.alg).ad_traces[3]);
  std::cout << rep.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// classify

json certificate_json(const classification::BranchCertificate& c) {
  json j;
  j["id"] = c.id;
  j["residual_count"] = c.residual_count;
  j["all_zero"] = c.all_zero;
  j["integrable"] = c.integrable;
  if (c.reduction_target) j["reduction_target"] = *c.reduction_target;
  return j;
}

int run_classify(const std::string& which) {
  json rep;
  if (which == "all") {
    json certs = json::array();
    int integrable = 0;
    for (const auto& b : classification::branches()) {
      auto c = classification::verify_branch(b);
      if (c.integrable) ++integrable;
      certs.push_back(certificate_json(c));
    }
    rep["branches"] = certs;
    rep["integrable_count"] = integrable;
    json reds = json::array();
    for (const auto& r : classification::verify_reductions())
      reds.push_back({{"name", r.name}, {"source", r.source_id}, {"target", r.target_id},
                      {"ok", r.ok}, {"note", r.note}});
    rep["reductions"] = reds;
    json cmp = json::array();
    for (const auto& line : classification::compare_with_printed())
      cmp.push_back({{"system", line.system}, {"index", line.index}, {"matched", line.matched},
                     {"note", line.note}});
    rep["derived_vs_printed"] = cmp;
  } else {
    int id = 0;
    try {
      id = std::stoi(which);
    } catch (const std::exception&) {
      std::cerr << "classify: --branch takes 'all' or an integer\n";
      return kExitParse;
    }
    if (id < 1 || id > 17) {
      std::cerr << "classify: branch id out of range 1..17\n";
      return kExitParse;
    }
    rep = certificate_json(classification::verify_branch(classification::branch(id)));
  }
  std::cout << rep.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// model

int run_model_g49(const Rational& alpha) {
  CoframeDiff<Rational> cf = g49_coframe(alpha);
  json rep;
  rep["alpha"] = rat_json(alpha);
  json rows = json::array();
  for (int k = 0; k < 4; ++k) {
    json r = json::array();
    for (int A = 0; A < 6; ++A) r.push_back(rat_json(cf.d[k].c[A]));
    rows.push_back(r);
  }
  rep["coframe_d"] = rows;
  auto sp = solvability_profile(g49_algebra(alpha));
  rep["is_solvable"] = sp.is_solvable;
  rep["jacobi_zero"] = jacobi_defect(g49_algebra(alpha)).is_zero;
  std::cout << rep.dump(2) << "\n";
  return kExitOk;
}

int run_model_r2sol2() {
  LieAlgebra4<Rational> alg = r2sol2_algebra<Rational>();
  json rep;
  json sc = json::array();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        if (alg.c(k, i, j) != 0)
          sc.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"value", rat_json(alg.c(k, i, j))}});
  rep["structure_constants"] = sc;
  rep["jacobi_zero"] = jacobi_defect(alg).is_zero;
  rep["is_solvable"] = solvability_profile(alg).is_solvable;
  std::cout << rep.dump(2) << "\n";
  return kExitOk;
}

int run_model_kowalski(double lambda, int points) {
  if (lambda <= 0) {
    std::cerr << "kowalski: lambda must be positive\n";
    return kExitDomain;
  }
  auto samples = kowalski::sample_points();
  points = std::clamp(points, 1, static_cast<int>(samples.size()));
  json rep;
  rep["lambda"] = fmt_double(lambda);
  json pts = json::array();
  for (int i = 0; i < points; ++i) {
    auto pr = kowalski::ricci_fd(samples[i], lambda);
    json p;
    p["point"] = {fmt_double(pr.point[0]), fmt_double(pr.point[1]), fmt_double(pr.point[2]),
                  fmt_double(pr.point[3])};
    p["scal"] = fmt_double(pr.scal);
    p["ricci_eigenvalues"] = {fmt_double(pr.ricci_eigenvalues[0]), fmt_double(pr.ricci_eigenvalues[1]),
                              fmt_double(pr.ricci_eigenvalues[2]), fmt_double(pr.ricci_eigenvalues[3])};
    p["richardson_ok"] = pr.richardson_ok;
    pts.push_back(p);
  }
  rep["points"] = pts;
  std::cout << rep.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct RangeSpec {
  Rational lo, hi;
};

RangeSpec parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("range must be lo:hi");
  return {parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1))};
}

int thread_budget() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LIE4_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, static_cast<unsigned>(cap));
  }
  return static_cast<int>(hw);
}

int run_sweep(const RangeSpec& srange, const RangeSpec& trange, int grid) {
  if (grid < 1) {
    std::cerr << "sweep: grid must be >= 1\n";
    return kExitParse;
  }
  std::vector<std::pair<Rational, Rational>> pts;
  for (int a = 0; a < grid; ++a)
    for (int b = 0; b < grid; ++b) {
      Rational fs = grid == 1 ? Rational(0) : Rational(a) / Rational(grid - 1);
      Rational ft = grid == 1 ? Rational(0) : Rational(b) / Rational(grid - 1);
      Rational s = srange.lo + fs * (srange.hi - srange.lo);
      Rational t = trange.lo + ft * (trange.hi - trange.lo);
      if (t == 0) continue;  // outside the family's domain
      pts.emplace_back(s, t);
    }

  std::vector<std::string> rows(pts.size());
  auto work = [&](size_t begin, size_t end) {
    for (size_t idx = begin; idx < end; ++idx) {
      const auto& [s, t] = pts[idx];
      AlmostHermitian4<Rational> ah = AlmostHermitian4<Rational>::standard(family_algebra(s, t));
      CurvatureData<Rational> cd = curvature(ah.m);
      auto defects = gray_condition_defects(cd.riem, ah.J);
      auto wb = weyl_decompose(ah);
      Rational w2r = scalar_abs(wb.w2[0]);
      if (scalar_abs(wb.w2[1]) > w2r) w2r = scalar_abs(wb.w2[1]);
      Rational w3r(0);
      for (const auto& row : wb.w3)
        for (const auto& x : row)
          if (scalar_abs(x) > w3r) w3r = scalar_abs(x);
      auto nij = nijenhuis(ah.m.alg, ah.J);
      Rational nnorm(0);
      for (const auto& r1 : nij.n)
        for (const auto& v : r1)
          for (const auto& x : v)
            if (scalar_abs(x) > nnorm) nnorm = scalar_abs(x);
      std::ostringstream os;
      os << rational_to_string(s) << "," << rational_to_string(t) << ","
         << rational_to_string(cd.ricci[2][2]) << ","
         << rational_to_string(unimodularity(ah.m.alg).ad_traces[3]) << ","
         << rational_to_string(riem4_max_abs(defects[1])) << "," << rational_to_string(w2r) << ","
         << rational_to_string(w3r) << "," << rational_to_string(nnorm);
      rows[idx] = os.str();
    }
  };

  int nthreads = std::min<int>(thread_budget(), static_cast<int>(pts.size()));
  if (nthreads <= 1) {
    work(0, pts.size());
  } else {
    std::vector<std::thread> threads;
    size_t chunk = (pts.size() + nthreads - 1) / nthreads;
    for (int i = 0; i < nthreads; ++i) {
      size_t begin = i * chunk, end = std::min(pts.size(), begin + chunk);
      if (begin < end) threads.emplace_back(work, begin, end);
    }
    for (auto& th : threads) th.join();
  }

  std::cout << "s,t,ricci33,trace_ad_e4,g2_residual,w2_residual,w3_residual,nijenhuis_norm\n";
  for (const auto& row : rows) std::cout << row << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact curvature toolkit for 4-dimensional metric Lie algebras"};
  app.require_subcommand(1);

  // check
  std::string check_file;
  bool check_float = false;
  auto* check = app.add_subcommand("check", "Verify an algebra spec file");
  check->add_option("file", check_file, "JSON algebra spec")->required();
  check->add_flag("--float", check_float, "use the floating backend");
  check->add_flag("--exact", "use the exact backend (default)");

  // family
  std::string fam_s = "0", fam_t = "1";
  auto* family = app.add_subcommand("family", "Curvature report of the two-parameter family");
  family->add_option("--s", fam_s, "parameter s (rational)");
  family->add_option("--t", fam_t, "parameter t (nonzero rational)");

  // classify
  std::string branch_sel = "all";
  auto* classify = app.add_subcommand("classify", "Branch certificates");
  classify->add_option("--branch", branch_sel, "'all' or a branch id 1..17");

  // model
  auto* model = app.add_subcommand("model", "Built-in models");
  model->require_subcommand(1);
  std::string g49_alpha = "1/2";
  auto* m_g49 = model->add_subcommand("g49", "g_{4,9}(alpha) coframe");
  m_g49->add_option("--alpha", g49_alpha, "rational alpha");
  auto* m_r2sol2 = model->add_subcommand("r2sol2", "R^2 x| sol_2 structure constants");
  double kow_lambda = 1.0;
  int kow_points = 10;
  auto* m_kow = model->add_subcommand("kowalski", "finite-difference coordinate model");
  m_kow->add_option("--lambda", kow_lambda, "positive scale parameter");
  m_kow->add_option("--points", kow_points, "number of sample points (1..10)");

  // sweep
  std::string s_range = "-1:1", t_range = "1/2:2";
  int grid = 5;
  auto* sweep = app.add_subcommand("sweep", "CSV sweep over (s, t)");
  sweep->add_option("--s-range", s_range, "lo:hi (rationals)");
  sweep->add_option("--t-range", t_range, "lo:hi (rationals)");
  sweep->add_option("--grid", grid, "grid points per axis");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      AlgebraInput in;
      try {
        in = parse_algebra_file(check_file);
      } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
      }
      return run_check(in, check_float);
    }
    if (*family) {
      Rational s, t;
      try {
        s = parse_rational(fam_s);
        t = parse_rational(fam_t);
      } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
      }
      return run_family(s, t);
    }
    if (*classify) return run_classify(branch_sel);
    if (*model) {
      if (*m_g49) return run_model_g49(parse_rational(g49_alpha));
      if (*m_r2sol2) return run_model_r2sol2();
      if (*m_kow) return run_model_kowalski(kow_lambda, kow_points);
    }
    if (*sweep) return run_sweep(parse_range(s_range), parse_range(t_range), grid);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResidual;
  }
  return kExitOk;
}
