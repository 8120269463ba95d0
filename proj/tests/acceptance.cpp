// Copyright 2026 The metabraid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance checks. Prints one PASS/FAIL line per criterion; exits non-zero
// if any selected criterion fails.
//
//   acceptance                 all criteria
//   acceptance --criterion 4   just one

#include "metabraid/report.hpp"

#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

namespace mb = metabraid;
using oracle::CM;
using oracle::cd;
using oracle::e12;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Tabulated generators against the F/R assembly.

// (1/3) [[p e^x + q e^y, ...]] as typed from the published matrices.
CM third(cd d00, cd d01, cd d11) {
  return {{d00 / 3.0, d01 / 3.0}, {d01 / 3.0, d11 / 3.0}};
}

struct Printed {
  std::string model;
  CM s1, s2;
  cd r1, r2, r4, r5;  // scalars on |NC> for sigma1, 2, 4, 5
  CM s3;
};

std::vector<Printed> printed_tables() {
  const double r2 = std::sqrt(2.0);
  std::vector<Printed> out;
  {
    Printed p;
    p.model = "V113_3";
    p.s1 = {{e12(9), 0}, {0, e12(1)}};
    p.s2 = third(2.0 * e12(7) + e12(3), -r2 * e12(7) + r2 * e12(3), e12(7) + 2.0 * e12(3));
    p.r1 = e12(1);   // R^{11}_2
    p.r2 = e12(7);   // R^{13}_2
    p.r4 = e12(7);   // R^{31}_2
    p.r5 = e12(1);   // R^{11}_2
    const cd a = e12(-3), b = e12(-11);
    p.s3 = {{(a + b) / 2.0, 0, 0, 0, (-a + b) / 2.0},
            {0, a, 0, 0, 0},
            {0, 0, b, 0, 0},
            {0, 0, 0, b, 0},
            {(-a + b) / 2.0, 0, 0, 0, (a + b) / 2.0}};
    out.push_back(p);
  }
  {
    Printed p;
    p.model = "V131_3";
    p.s1 = {{e12(7), 0}, {0, e12(3)}};
    p.s2 = third(e12(7) + 2.0 * e12(3), -r2 * e12(7) + r2 * e12(3), 2.0 * e12(7) + e12(3));
    p.r1 = e12(7);  // R^{13}_2
    p.r2 = e12(7);  // R^{31}_2
    p.r4 = e12(7);
    p.r5 = e12(7);
    const cd a = e12(9), b = e12(1);
    p.s3 = {{(a + b) / 2.0, (-a + b) / 2.0, 0, 0, 0},
            {(-a + b) / 2.0, (a + b) / 2.0, 0, 0, 0},
            {0, 0, e12(-1), 0, 0},
            {0, 0, 0, e12(-1), 0},
            {0, 0, 0, 0, a}};
    out.push_back(p);
  }
  {
    Printed p;
    p.model = "V133_1";
    p.s1 = {{e12(7), 0}, {0, e12(3)}};
    p.s2 = third(2.0 * e12(-3) + e12(-11), -r2 * e12(-3) + r2 * e12(-11), e12(-3) + 2.0 * e12(-11));
    p.r1 = e12(7);    // R^{13}_2
    p.r2 = e12(-11);  // R^{33}_2
    p.r4 = e12(-11);
    p.r5 = e12(7);    // R^{31}_2
    const cd a = e12(-3), b = e12(-11);
    p.s3 = {{(a + b) / 2.0, (-a + b) / 2.0, 0, 0, 0},
            {(-a + b) / 2.0, (a + b) / 2.0, 0, 0, 0},
            {0, 0, b, 0, 0},
            {0, 0, 0, b, 0},
            {0, 0, 0, 0, a}};
    out.push_back(p);
  }
  return out;
}

Outcome criterion1() {
  constexpr double kTol = 1e-12;
  const CM i2 = oracle::eye(2);
  double worst = 0;
  std::vector<std::string> bad;
  auto check = [&](const std::string& what, const mb::Matrix<double>& got, const CM& want) {
    const CM g = oracle::from_lib(got);
    double d = 0;
    std::string where;
    for (std::size_t r = 0; r < want.size(); ++r)
      for (std::size_t c = 0; c < want.size(); ++c) {
        const double e = std::abs(g[r][c] - want[r][c]);
        if (e > kTol) where += " (" + std::to_string(r) + "," + std::to_string(c) + ")";
        d = std::max(d, e);
      }
    worst = std::max(worst, d);
    if (d > kTol) bad.push_back(what + " off by " + sci(d) + " at" + where);
  };
  for (const Printed& p : printed_tables()) {
    const auto model = mb::ModelSpec::parse(p.model);
    const auto one = mb::one_qubit_ebms<double>(model);
    check(p.model + " sigma1(3)", one.generators[0], p.s1);
    check(p.model + " sigma2(3)", one.generators[1], p.s2);
    const auto two = mb::two_qubit_ebms<double>(model, mb::EbmVariant::printed);
    check(p.model + " sigma1(6)", two.generators[0], oracle::scalar_sum(p.r1, oracle::kron(p.s1, i2)));
    check(p.model + " sigma2(6)", two.generators[1], oracle::scalar_sum(p.r2, oracle::kron(p.s2, i2)));
    check(p.model + " sigma4(6)", two.generators[3], oracle::scalar_sum(p.r4, oracle::kron(i2, p.s1)));
    check(p.model + " sigma5(6)", two.generators[4], oracle::scalar_sum(p.r5, oracle::kron(i2, p.s2)));
    check(p.model + " sigma3(6)", mb::sigma3_from_fr<double>(model), p.s3);
  }
  Outcome o;
  o.pass = bad.empty();
  std::ostringstream os;
  os << "21 matrices, worst entry error " << sci(worst);
  for (const auto& b : bad) os << "; " << b;
  o.detail = os.str();
  return o;
}

// ---------------------------------------------------------------------------
// 2. Unitarity, Yang-Baxter, far commutation.

template <typename Real>
void relations(const mb::EbmSet<Real>& set, double& unit, double& yb, double& far) {
  const int n = set.generator_count();
  for (int i = 0; i < n; ++i) {
    unit = std::max(unit, mb::to_double(mb::unitarity_error(set.generators[i])));
    for (int j = i + 1; j < n; ++j) {
      const auto& a = set.generators[i];
      const auto& b = set.generators[j];
      if (j == i + 1) {
        yb = std::max(yb, mb::to_double(mb::max_abs_diff(a * b * a, b * a * b)));
      } else {
        far = std::max(far, mb::to_double(mb::max_abs_diff(a * b, b * a)));
      }
    }
  }
}

std::vector<std::pair<std::string, std::function<void(double&, double&, double&, bool)>>> all_sets() {
  std::vector<std::pair<std::string, std::function<void(double&, double&, double&, bool)>>> out;
  auto add = [&](const std::string& label, auto build) {
    out.emplace_back(label, [build](double& u, double& y, double& f, bool big) {
      if (big) {
        relations(build.template operator()<mb::BigFloat>(), u, y, f);
      } else {
        relations(build.template operator()<double>(), u, y, f);
      }
    });
  };
  for (const auto& m : mb::qubit_models()) {
    const std::string name = m.name();
    add(name + "/1q", [name]<typename R>() { return mb::make_ebm_set<R>(name, mb::Arity::one_qubit); });
    add(name + "/2q", [name]<typename R>() { return mb::make_ebm_set<R>(name, mb::Arity::two_qubit); });
    if (mb::has_printed_sigma3(m)) {
      add(name + "/2q-printed", [name]<typename R>() {
        return mb::make_ebm_set<R>(name, mb::Arity::two_qubit, mb::EbmVariant::printed);
      });
    }
  }
  add("fibonacci/1q", []<typename R>() { return mb::fibonacci_ebms<R>(); });
  return out;
}

Outcome criterion2() {
  const double tol_native = 1e-12, tol_big = 1e-60;
  std::vector<std::string> bad;
  double wu[2] = {0, 0}, wy[2] = {0, 0}, wf[2] = {0, 0};
  int count = 0;
  for (auto& [label, run] : all_sets()) {
    ++count;
    for (int big = 0; big < 2; ++big) {
      mb::PrecisionScope scope(256);
      double u = 0, y = 0, f = 0;
      run(u, y, f, big == 1);
      wu[big] = std::max(wu[big], u);
      wy[big] = std::max(wy[big], y);
      wf[big] = std::max(wf[big], f);
      const double tol = big ? tol_big : tol_native;
      const std::string tag = label + (big ? " bigfloat" : " native64");
      if (u > tol) bad.push_back(tag + " unitarity " + sci(u));
      if (y > tol) bad.push_back(tag + " Yang-Baxter " + sci(y));
      if (f > tol) bad.push_back(tag + " far-commutation " + sci(f));
    }
  }
  Outcome o;
  o.pass = bad.empty();
  std::ostringstream os;
  os << count << " sets; native64 max (unit, YB, far) = (" << sci(wu[0]) << ", " << sci(wy[0]) << ", "
     << sci(wf[0]) << "); bigfloat:256 = (" << sci(wu[1]) << ", " << sci(wy[1]) << ", " << sci(wf[1])
     << ")";
  for (const auto& b : bad) os << "; " << b;
  o.detail = os.str();
  return o;
}

// ---------------------------------------------------------------------------
// 3. The three length-20 CNOT words.

Outcome criterion3() {
  mb::TableOptions opt;
  opt.backend = mb::Backend::big(256);
  const auto rep = mb::run_table("table1", opt);
  const auto& t = rep.table;
  std::map<std::string, std::string> zero_order;
  std::vector<std::string> bad;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    const std::string model = t.at(r, "model");
    const std::string order = t.at(r, "order");
    const double d = std::strtod(t.at(r, "distance_bigfloat:256").c_str(), nullptr);
    const double m11 = std::stod(t.at(r, "m11_abs_native64"));
    const double ud = std::stod(t.at(r, "unitarity_defect_native64"));
    if (d < 1e-60) {
      zero_order.emplace(model, order);
      if (std::abs(m11 - 1) > 1e-12) bad.push_back(model + " |M11| = " + std::to_string(m11));
      if (ud > 1e-13) bad.push_back(model + " unitarity defect " + sci(ud));
    }
  }
  for (const auto& ref : mb::table1_reference())
    if (!zero_order.count(ref.model)) bad.push_back(ref.model + " not numerically zero in either order");
  Outcome o;
  o.pass = bad.empty();
  std::ostringstream os;
  for (const auto& [m, ord] : zero_order) os << m << " zero under " << ord << "; ";
  for (const auto& b : bad) os << b << "; ";
  o.detail = os.str();
  return o;
}

// ---------------------------------------------------------------------------
// 4 and 5. Exhaustive minima.

struct Minima {
  std::map<int, double> by_length;
  bool truncated = false;
};

Minima minima(const std::string& model, bool inverses, int lo, int hi) {
  mb::SearchConfig cfg;
  cfg.source.model = model;
  cfg.source.arity = mb::Arity::two_qubit;
  cfg.use_inverses = inverses;
  cfg.min_len = lo;
  cfg.max_len = hi;
  cfg.keep_top_k = 1;
  cfg.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const auto res = mb::exhaustive_search(cfg, mb::Objective::cnot(mb::Backend::big(256)));
  Minima m;
  m.truncated = res.truncated;
  for (const auto& lr : res.per_length) {
    m.by_length[lr.length] = lr.top.empty() ? std::numeric_limits<double>::quiet_NaN() : lr.top.front().distance;
  }
  return m;
}

bool is_five(double d) { return std::abs(d - 5.0) <= 1e-10; }

Outcome criterion4() {
  std::vector<std::string> bad;
  std::ostringstream os;
  // Expected at length 7..10: true = numerically zero, false = plateau at 5.
  const std::map<std::string, std::vector<bool>> zero_at = {
      {"V113_3", {true, true, true, true}},
      {"V131_3", {true, true, true, true}},
      {"V133_1", {false, false, false, true}},
  };
  for (const auto& [model, pattern] : zero_at) {
    const Minima m = minima(model, false, 3, 10);
    if (m.truncated) bad.push_back(model + " truncated");
    os << model << ":";
    for (int len = 3; len <= 10; ++len) {
      const double d = m.by_length.at(len);
      os << " " << sci(d);
      const bool want_zero = len >= 7 && pattern[len - 7];
      const bool ok = want_zero ? d < 1e-30 : is_five(d);
      if (!ok) bad.push_back(model + " L=" + std::to_string(len) + " got " + sci(d));
    }
    os << "; ";
  }
  Outcome o;
  o.pass = bad.empty();
  for (const auto& b : bad) os << "MISMATCH " << b << "; ";
  o.detail = os.str();
  return o;
}

Outcome criterion5() {
  std::vector<std::string> bad;
  std::ostringstream os;
  for (const auto& m : mb::qubit_models()) {
    const Minima r = minima(m.name(), true, 3, 5);
    for (int len = 3; len <= 5; ++len)
      if (!is_five(r.by_length.at(len)))
        bad.push_back(m.name() + " L=" + std::to_string(len) + " got " + sci(r.by_length.at(len)));
  }
  os << "L3-5 plateau checked on 6 models; ";
  const Minima v = minima("V113_3", true, 6, 7);
  os << "V113_3 L6 " << sci(v.by_length.at(6)) << ", L7 " << sci(v.by_length.at(7)) << "; ";
  if (v.truncated) bad.push_back("V113_3 truncated");
  if (!(v.by_length.at(6) < 1e-30)) bad.push_back("V113_3 L6 not numerically zero");
  if (!(v.by_length.at(7) < 1e-35)) bad.push_back("V113_3 L7 not below 1e-35");
  Outcome o;
  o.pass = bad.empty();
  for (const auto& b : bad) os << "MISMATCH " << b << "; ";
  o.detail = os.str();
  return o;
}

// ---------------------------------------------------------------------------
// 6. Local invariants.

Outcome criterion6() {
  std::vector<std::string> bad;
  auto near3 = [](const mb::LocalInvariants<double>& g, double a, double b, double c, double tol) {
    return std::abs(g.g1 - a) <= tol && std::abs(g.g2 - b) <= tol && std::abs(g.g3 - c) <= tol;
  };
  if (!near3(mb::local_invariants(mb::gate_matrix<double>("CNOT")), 0, 0, 1, 1e-12)) bad.push_back("CNOT");
  for (const auto& [name, ref] :
       std::vector<std::pair<std::string, CM>>{{"I4", oracle::eye(4)}, {"SWAP", oracle::swap_gate()}}) {
    const auto o = oracle::makhlin(ref);
    if (!near3(mb::local_invariants(mb::gate_matrix<double>(name)), o.g1, o.g2, o.g3, 1e-12))
      bad.push_back(name + " vs oracle");
  }
  if (!near3(mb::local_invariants(mb::gate_matrix<double>("I4")), 1, 0, 3, 1e-12)) bad.push_back("I4");
  if (!near3(mb::local_invariants(mb::gate_matrix<double>("SWAP")), -1, 0, -3, 1e-12)) bad.push_back("SWAP");

  std::mt19937_64 rng(2026);
  double worst = 0;
  const CM cnot = oracle::cnot();
  for (int i = 0; i < 1000; ++i) {
    const CM k1 = oracle::kron(oracle::random_unitary(2, rng), oracle::random_unitary(2, rng));
    const CM k2 = oracle::kron(oracle::random_unitary(2, rng), oracle::random_unitary(2, rng));
    const CM u = oracle::random_unitary(4, rng);
    const auto gc = mb::local_invariants(oracle::to_lib<double>(oracle::mul(oracle::mul(k1, cnot), k2)));
    const auto gu = mb::local_invariants(oracle::to_lib<double>(u));
    const auto gd = mb::local_invariants(oracle::to_lib<double>(oracle::mul(oracle::mul(k1, u), k2)));
    worst = std::max({worst, std::abs(gc.g1), std::abs(gc.g2), std::abs(gc.g3 - 1), std::abs(gd.g1 - gu.g1),
                      std::abs(gd.g2 - gu.g2), std::abs(gd.g3 - gu.g3)});
  }
  if (worst > 1e-10) bad.push_back("dressing drift " + sci(worst));
  Outcome o;
  o.pass = bad.empty();
  std::ostringstream os;
  os << "fixed points ok for CNOT, I4, SWAP; 1000 dressings max drift " << sci(worst);
  for (const auto& b : bad) os << "; MISMATCH " << b;
  o.detail = os.str();
  return o;
}

// ---------------------------------------------------------------------------
// 7. Compilation thresholds.

Outcome criterion7() {
  struct Claim {
    std::string model;
    int level;
  };
  const std::vector<Claim> claims = {{"V131_3", 1}, {"V113_3", 2}, {"V133_1", 2}, {"fibonacci", 2}};
  const std::vector<std::uint64_t> seeds = {1, 2, 3};
  std::vector<std::string> bad;
  std::ostringstream os;
  for (const auto& c : claims) {
    for (const std::string gate : {"H", "T"}) {
      int ok = 0;
      std::string dists;
      for (auto seed : seeds) {
        mb::SKAConfig cfg;
        cfg.model = c.model;
        cfg.basic_length = 30;
        cfg.max_level = 3;
        cfg.ga.seed = seed;
        mb::SolovayKitaev ska(cfg);
        const auto levels = ska.compile(mb::gate_matrix<double>(gate));
        bool decreasing = true;
        for (std::size_t l = 1; l < levels.size(); ++l)
          decreasing = decreasing && levels[l].distance < levels[l - 1].distance;
        const double d = levels[c.level].distance;
        if (d < 1e-2 && decreasing) ++ok;
        dists += " " + sci(d) + (decreasing ? "" : "(non-decreasing)");
      }
      os << c.model << " " << gate << " L" << c.level << ":" << dists << " [" << ok << "/3]; ";
      if (ok < 2) bad.push_back(c.model + " " + gate);
    }
  }
  Outcome o;
  o.pass = bad.empty();
  for (const auto& b : bad) os << "FAILED " << b << "; ";
  o.detail = os.str();
  return o;
}

// ---------------------------------------------------------------------------
// 8. GA determinism and monotone best.

Outcome criterion8() {
  mb::GAConfig cfg;
  cfg.word_length = 20;
  cfg.population = 120;
  cfg.generations = 120;
  cfg.restarts = 2;
  cfg.seed = 11;
  mb::EbmSource src{"V113_3", mb::Arity::two_qubit, mb::EbmVariant::derived, std::nullopt};
  std::vector<mb::GAResult> runs;
  for (int threads : {1, 2, 4}) {
    cfg.threads = threads;
    runs.push_back(mb::ga_search(cfg, src, mb::Objective::cnot()));
  }
  std::vector<std::string> bad;
  for (std::size_t k = 1; k < runs.size(); ++k) {
    const auto& a = runs[0];
    const auto& b = runs[k];
    bool same = a.best.letters == b.best.letters && a.trace.size() == b.trace.size() &&
                std::memcmp(&a.best.distance_native, &b.best.distance_native, sizeof(double)) == 0;
    for (std::size_t i = 0; same && i < a.trace.size(); ++i)
      same = std::memcmp(&a.trace[i].best, &b.trace[i].best, sizeof(double)) == 0 &&
             std::memcmp(&a.trace[i].mean, &b.trace[i].mean, sizeof(double)) == 0;
    if (!same) bad.push_back("thread count changes result");
  }
  const auto& tr = runs[0].trace;
  for (std::size_t i = 1; i < tr.size(); ++i)
    if (tr[i].restart == tr[i - 1].restart && tr[i].best < tr[i - 1].best)
      bad.push_back("best fitness fell at generation " + std::to_string(tr[i].generation));
  Outcome o;
  o.pass = bad.empty();
  std::ostringstream os;
  os << "threads 1/2/4 bit-identical over " << tr.size() << " generations, best " << runs[0].best.letters
     << " d=" << sci(runs[0].best.distance_native);
  for (const auto& b : bad) os << "; " << b;
  o.detail = os.str();
  return o;
}

// ---------------------------------------------------------------------------
// 9. Group commutator reconstruction.

Outcome criterion9() {
  std::mt19937_64 rng(909);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> angle(1e-8, 0.5);
  const cd i(0, 1);
  double worst = 0;
  for (int k = 0; k < 1000; ++k) {
    double n[3] = {g(rng), g(rng), g(rng)};
    const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    for (double& x : n) x /= len;
    const double t = angle(rng);
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    // cos(t/2) I - i sin(t/2) n.sigma
    const CM delta = {{c - i * s * n[2], -i * s * (n[0] - i * n[1])},
                      {-i * s * (n[0] + i * n[1]), c + i * s * n[2]}};
    const auto [v, w] = mb::gc_decompose(oracle::to_lib<double>(delta));
    const CM cv = oracle::from_lib(v), cw = oracle::from_lib(w);
    const CM comm = oracle::mul(oracle::mul(cv, cw), oracle::mul(oracle::dag(cv), oracle::dag(cw)));
    // Induced infinity norm: largest absolute row sum.
    for (int r = 0; r < 2; ++r)
      worst = std::max(worst, std::abs(comm[r][0] - delta[r][0]) + std::abs(comm[r][1] - delta[r][1]));
  }
  return {worst <= 1e-12, "1000 samples, max ||VWV^dag W^dag - D||_inf = " + sci(worst)};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int a = 1; a < argc; ++a) {
    if (std::strcmp(argv[a], "--criterion") == 0 && a + 1 < argc) {
      only = std::atoi(argv[++a]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> all = {
      {"EBM fidelity", criterion1},        {"algebraic invariants", criterion2},
      {"Table 1 words", criterion3},       {"Table 3 minima", criterion4},
      {"Table 4 minima", criterion5},      {"local invariants", criterion6},
      {"compilation thresholds", criterion7}, {"GA determinism", criterion8},
      {"GC decomposition", criterion9},
  };
  if (only < 0 || only > static_cast<int>(all.size())) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  bool ok = true;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (only && static_cast<int>(k) + 1 != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu %-24s %s (%.1fs) %s\n", k + 1, all[k].first.c_str(), o.pass ? "PASS" : "FAIL",
                secs, o.detail.c_str());
    std::fflush(stdout);
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}
