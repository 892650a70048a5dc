#include "cms/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "cms/diffop.hpp"
#include "cms/hc.hpp"
#include "cms/integrals.hpp"
#include "cms/lambda.hpp"
#include "cms/macdiff.hpp"
#include "cms/parallel.hpp"
#include "cms/render.hpp"
#include "cms/symfun.hpp"

namespace cms {

namespace {

const char* kConjectural = "unsupported: integrability of this system is conjectural";

struct Outcome {
  Status status;
  std::string witness;
};

Outcome gate(bool ok, const std::string& witness) { return {ok ? Status::Pass : Status::Fail, witness}; }

std::string clip(const std::string& s, size_t n) { return s.size() <= n ? s : s.substr(0, n) + "..."; }

// Collects claim tasks; `run` evaluates them on the pool and keeps the order.
class SuiteBuilder {
 public:
  void add(std::string id, std::string anchor, std::function<Outcome()> fn) {
    tasks_.push_back({std::move(id), std::move(anchor), std::move(fn)});
  }

  std::vector<Claim> run() {
    std::vector<Claim> out(tasks_.size());
    parallel_for(static_cast<int>(tasks_.size()), [&](int i) {
      auto start = std::chrono::steady_clock::now();
      Claim c;
      c.id = tasks_[i].id;
      c.anchor = tasks_[i].anchor;
      try {
        Outcome o = tasks_[i].fn();
        c.status = o.status;
        c.witness = o.witness;
      } catch (const std::exception& e) {
        c.status = Status::Fail;
        c.witness = std::string("error: ") + e.what();
      }
      if (c.status == Status::Fail && c.witness.empty()) c.witness = "check failed";
      c.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      out[i] = std::move(c);
    });
    return out;
  }

 private:
  struct Task {
    std::string id, anchor;
    std::function<Outcome()> fn;
  };
  std::vector<Task> tasks_;
};

std::string bracket(std::initializer_list<int> xs) {
  std::string s = "[";
  bool first = true;
  for (int x : xs) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + "]";
}

const char* model_name(Model m) { return m == Model::Geometric ? "trig" : "rational"; }

std::string system_label(const GRS& g, Model model) { return g.label() + " " + model_name(model); }

void require_classical(const GRS& g) {
  if (!is_classical(g.family())) throw UnsupportedError(kConjectural);
}

bool is_bc(const GRS& g) { return g.family() == Family::BC; }

// ---- operator suites -------------------------------------------------------

SuiteReport suite_main_identity(const SuiteOptions& o) {
  auto g = selected_system(o);
  SuiteBuilder b;
  b.add("main-identity", "sum of m_a m_b (a,b) F_a F_b over non-proportional positive pairs vanishes", [g, o] {
    auto r = main_identity(*g, o.model);
    return gate(r.holds, r.residue);
  });
  // one representative per (multiplicity, real/imaginary) class
  std::map<std::pair<std::string, bool>, int> classes;
  for (int i : g->positive_roots()) classes.emplace(std::make_pair(g->roots()[i].mult.str(), g->roots()[i].imaginary), i);
  std::set<std::vector<int>> directions;
  for (int i : g->positive_roots()) {
    std::vector<int> c = g->roots()[i].lattice;
    int d = 0;
    for (int x : c) d = std::gcd(d, std::abs(x));
    for (int& x : c) x /= d;
    directions.insert(c);
  }
  bool has_pairs = directions.size() > 1;
  for (const auto& [key, index] : classes) {
    std::string id = "perturbed[" + key.first + (key.second ? ",imaginary" : ",real") + "]";
    if (!has_pairs) {
      b.add(id, "the identity fails when this multiplicity class is replaced by value + 1",
            [] { return Outcome{Status::Reported, "no non-proportional pairs of positive roots"}; });
      continue;
    }
    b.add(id, "the identity fails when this multiplicity class is replaced by value + 1", [g, o, index] {
      auto h = g->with_multiplicity(index, g->roots()[index].mult + Scalar(1));
      auto r = main_identity(*h, o.model);
      return gate(!r.holds, r.holds ? "identity still holds" : "residue " + clip(r.residue, 200));
    });
  }
  return {"main-identity", system_label(*g, o.model), b.run()};
}

SuiteReport suite_gauge(const SuiteOptions& o) {
  auto g = selected_system(o);
  SuiteBuilder b;
  for (Normalization norm : {Normalization::Full, Normalization::Half}) {
    bool full = norm == Normalization::Full;
    b.add(full ? "gauge[full]" : "gauge[half]",
          "psi0^-1 L psi0 minus the radial operator is the constant -|rho(m)|^2 (scaled by the normalization)",
          [g, o, norm, full] {
            EulerOp diff = conjugate_by_psi0(*g, build_schrodinger(*g, o.model, norm), o.model, norm) -
                           build_radial(*g, o.model, norm);
            Scalar expected;
            if (o.model == Model::Geometric) expected = -rho_norm_squared(*g) * (full ? Scalar(1) : Scalar::rational(1, 4));
            bool constant = diff.is_zero() || (diff.terms().size() == 1 && diff.terms().begin()->first.is_one() &&
                                               diff.terms().begin()->second.is_constant());
            if (!constant) return gate(false, "not constant: " + clip(diff.str(), 400));
            Scalar value = diff.is_zero() ? Scalar(0) : diff.terms().begin()->second.constant_value();
            return gate(value == expected,
                        "constant " + value.str() + ", |rho(m)|^2 = " + rho_norm_squared(*g).str());
          });
  }
  return {"gauge", system_label(*g, o.model), b.run()};
}

SuiteReport suite_commute(const SuiteOptions& o) {
  auto g = selected_system(o);
  require_classical(*g);
  int pmax = o.pmax.value_or(4), qmax = o.qmax.value_or(pmax);
  auto fam = std::make_shared<IntegralFamily>(g, o.model);
  SuiteBuilder b;
  int top = std::max(pmax, qmax);
  if (is_bc(*g))
    for (int p = 1; p <= top; p += 2)
      b.add("vanishes" + bracket({p}), "odd integrals of a BC system vanish", [fam, p] {
        const EulerOp& l = fam->integral(p);
        return gate(l.is_zero(), l.is_zero() ? "" : clip(l.str(), 400));
      });
  for (int p = 1; p <= pmax; ++p)
    for (int q = p + 1; q <= qmax; ++q) {
      if (is_bc(*g) && (p % 2 || q % 2)) continue;
      b.add("commute" + bracket({p, q}), "[L_p, L_q] = 0", [fam, p, q] {
        EulerOp c = fam->commutator(p, q);
        return gate(c.is_zero(), c.is_zero() ? "" : clip(c.str(), 400));
      });
    }
  std::vector<int> ps;
  for (int p = is_bc(*g) ? 2 : 1; p <= top && static_cast<int>(ps.size()) < g->dim(); p += is_bc(*g) ? 2 : 1)
    ps.push_back(p);
  if (!ps.empty())
    b.add("independent", "the top symbols of the first d nonzero integrals are algebraically independent, d the number of coordinates", [fam, ps] {
      int r = fam->independent_symbols(ps);
      return gate(r == static_cast<int>(ps.size()),
                  "rank " + std::to_string(r) + " of " + std::to_string(ps.size()));
    });
  return {"commute", system_label(*g, o.model), b.run()};
}

SuiteReport suite_commutator_relation(const SuiteOptions& o) {
  auto g = selected_system(o);
  require_classical(*g);
  int pmax = o.pmax.value_or(3);
  auto fam = std::make_shared<IntegralFamily>(g, o.model);
  SuiteBuilder b;
  for (int v = 0; v < static_cast<int>(fam->orbit().size()); ++v)
    for (int p = 1; p <= pmax; ++p)
      b.add("commutator-relation" + bracket({v, p}),
            "[L_2, d_v^(p)] = (v,v) sum m_a <a,a>/<v,v> phi_a (d_v^(p) - d_{s_a v}^(p)) for v = " +
                to_string(fam->orbit()[v]),
            [fam, v, p] {
              EulerOp d = fam->commutator_relation_defect(v, p);
              return gate(d.is_zero(), d.is_zero() ? "" : clip(d.str(), 400));
            });
  return {"commutator-relation", system_label(*g, o.model), b.run()};
}

// ---- Harish-Chandra images --------------------------------------------------

SuiteReport suite_hc(const SuiteOptions& o) {
  auto g = selected_system(o);
  require_classical(*g);
  int pmax = o.pmax.value_or(5);
  auto hc = std::make_shared<HCFamily>(g);
  VarNames names = lambda_names(g->dim());
  SuiteBuilder b;
  for (int p = 1; p <= pmax; ++p) {
    if (o.model == Model::Affine) {
      b.add("quasi-invariant" + bracket({p}), "the rational image is quasi-invariant", [g, hc, p, names] {
        Poly top = homogeneous_part(hc->image(p), p);
        std::string w;
        bool ok = quasi_invariant_rational(*g, top, &w);
        return gate(ok, ok ? to_string(top, names) : w);
      });
      continue;
    }
    b.add("quasi-invariant" + bracket({p}), "Z_p(λ + γ/2) = Z_p(λ - γ/2) on (γ, λ) = 0 for imaginary γ",
          [g, hc, p] {
            std::string w;
            bool ok = quasi_invariant(*g, hc->image(p), &w);
            return gate(ok, w);
          });
    b.add("w0-invariant" + bracket({p}), "Z_p is invariant under reflections in the real roots", [g, hc, p] {
      std::string w;
      bool ok = w0_invariant(*g, hc->image(p), &w);
      return gate(ok, w);
    });
    b.add("highest-term" + bracket({p}), "top part of Z_p is sum λ_i^p + k^(p-1) sum λ_j^p (doubled for BC, even p)",
          [g, hc, p, names] {
            Poly top = homogeneous_part(hc->image(p), p);
            Poly expected = power_sum_top(*g, p);
            if (is_bc(*g)) expected = p % 2 ? Poly() : expected * Scalar(2);
            return gate(top == expected, to_string(top, names));
          });
  }
  if (o.model == Model::Geometric) {
    auto fam = std::make_shared<IntegralFamily>(g, o.model);
    for (int p = 1; p <= std::min(pmax, 3); ++p)
      b.add("operator-image" + bracket({p}), "the constant-coefficient limit of L_p at λ + rho(m)/2 equals Z_p",
            [g, hc, fam, p, names] {
              Poly img = operator_image(*fam, p, hc_rho(*g));
              Poly z = hc->image(p);
              return gate(img == z, img == z ? "" : to_string(img - z, names));
            });
  }
  return {"hc", system_label(*g, o.model), b.run()};
}

SuiteReport suite_bernoulli(const SuiteOptions& o) {
  auto g = selected_system(o);
  if (g->family() != Family::A) throw UsageError("the bernoulli suite needs an A system");
  int rmax = o.pmax.value_or(6);
  auto hc = std::make_shared<HCFamily>(g);
  SuiteBuilder b;
  for (int r = 1; r <= rmax; ++r)
    b.add("generator-quasi-invariant" + bracket({r}), "Y_r = sum B_r(λ_i + 1/2) + k^(r-1) sum B_r(λ_j + 1/2) is quasi-invariant",
          [g, r] {
            std::string w;
            bool ok = quasi_invariant(*g, bernoulli_generator(*g, r), &w);
            return gate(ok, w);
          });
  for (int p = 1; p <= std::min(rmax, 4); ++p)
    b.add("in-span" + bracket({p}), "Z_p is a polynomial in Y_1..Y_p", [g, hc, p] {
      std::vector<Poly> gens;
      for (int r = 1; r <= p; ++r) gens.push_back(bernoulli_generator(*g, r));
      auto c = express_in_generators(hc->image(p), gens, p);
      std::string w;
      if (c) {
        for (const auto& s : *c)
          if (!s.is_zero()) w += (w.empty() ? "" : ", ") + s.str();
      }
      return gate(c.has_value(), c ? "coefficients " + w : "not in the span");
    });
  return {"bernoulli", system_label(*g, o.model), b.run()};
}

// ---- Lambda algebras ----------------------------------------------------------

std::string lambda_label(int n, int m) { return "Lambda(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

SuiteReport suite_dimensions(const SuiteOptions& o) {
  int n = o.n, m = o.m, nmax = o.N.value_or(6);
  SuiteBuilder b;
  for (int N = 1; N <= nmax; ++N) {
    b.add("dimension" + bracket({N}), "dim of the degree-N part = rank of the Newton products = fat-hook count", [n, m, N] {
      long d = hook_count(n, m, N);
      int dim = component_dimension(n, m, N);
      int rk = newton_span_rank(n, m, N);
      return gate(dim == d && rk == d, "dim " + std::to_string(dim) + ", newton rank " + std::to_string(rk) +
                                           ", D_N " + std::to_string(d));
    });
    if (o.pin_k) {
      Scalar k = *o.pin_k;
      b.add("pinned" + bracket({N}), "dimension and Newton rank at k = " + k.str(), [n, m, N, k] {
        int dim = component_dimension(n, m, N, k);
        int rk = newton_span_rank(n, m, N, k);
        return Outcome{Status::Reported, "dim " + std::to_string(dim) + ", newton rank " + std::to_string(rk) +
                                             ", D_N " + std::to_string(hook_count(n, m, N))};
      });
    }
  }
  return {"dimensions", lambda_label(n, m), b.run()};
}

SuiteReport suite_poincare(const SuiteOptions& o) {
  int n = o.n, m = o.m, nmax = o.N.value_or(10);
  SuiteBuilder b;
  auto series = std::make_shared<std::vector<mpz_class>>(poincare_closed_form(n, m, nmax));
  auto bc = std::make_shared<std::vector<mpz_class>>(poincare_closed_form_bc(n, m, nmax));
  for (int N = 0; N <= nmax; ++N) {
    b.add("series" + bracket({N}), "D_N equals the coefficient of t^N in the closed-form Poincare series", [n, m, N, series] {
      long d = hook_count(n, m, N);
      return gate(mpz_class(d) == (*series)[N], "D_N " + std::to_string(d) + ", series " + (*series)[N].get_str());
    });
    b.add("symmetric" + bracket({N}), "D_N(n,m) = D_N(m,n)", [n, m, N] {
      long a = hook_count(n, m, N), c = hook_count(m, n, N);
      return gate(a == c, std::to_string(a) + " vs " + std::to_string(c));
    });
  }
  for (int N = 0; N <= std::min(nmax, 8); N += 2)
    b.add("bc-series" + bracket({N}), "BC component dimension equals the coefficient of P(t^2)", [n, m, N, bc] {
      int d = component_dimension_bc(n, m, N);
      return gate(mpz_class(d) == (*bc)[N], "dim " + std::to_string(d) + ", series " + (*bc)[N].get_str());
    });
  if (m == 1)
    b.add("numerator", "for m = 1 the numerator is 1 + t^(n+2) + ... + t^(2n+1)", [n] {
      auto num = poincare_numerator_m1(n);
      std::string w;
      bool ok = true;
      for (int d = 0; d < static_cast<int>(num.size()); ++d) {
        mpz_class expected = (d == 0 || (d >= n + 2 && d <= 2 * n + 1)) ? 1 : 0;
        if (num[d] != expected) ok = false;
        if (num[d] != 0) w += (w.empty() ? "" : " + ") + std::string(num[d] == 1 ? "" : num[d].get_str() + "*") + "t^" + std::to_string(d);
      }
      return gate(ok, w);
    });
  return {"poincare", lambda_label(n, m), b.run()};
}

SuiteReport suite_super_jack(const SuiteOptions& o) {
  int n = o.n, m = o.m, nmax = o.N.value_or(5);
  SuiteBuilder b;
  VarNames names = super_names(n, m);
  for (int w = 1; w <= nmax; ++w) {
    auto hooks = fat_hook_partitions(n, m, w);
    for (const auto& lam : hooks) {
      b.add("member" + std::string("[") + lam.str() + "]", "the super-Jack image lies in Lambda^0", [lam, n, m] {
        Poly f = super_jack(lam, n, m);
        std::string wit;
        bool ok = lambda0_member(f, n, m, &wit);
        return gate(ok, wit);
      });
      b.add("leading[" + lam.str() + "]", "lex-leading monomial is x^λ y^<λ' - n>", [lam, n, m, names] {
        Poly f = super_jack(lam, n, m);
        Monomial lead = f.lex_leading().first;
        Monomial expected = expected_leading_monomial(lam, n, m);
        return gate(lead == expected, render_monomial(lead, names));
      });
    }
    b.add("independent" + bracket({w}), "super-Jack images of equal weight are linearly independent", [hooks, n, m] {
      std::vector<Poly> images;
      for (const auto& lam : hooks) images.push_back(super_jack(lam, n, m));
      int r = polynomial_rank(images);
      return gate(r == static_cast<int>(hooks.size()), "rank " + std::to_string(r) + " of " + std::to_string(hooks.size()));
    });
  }
  return {"super-jack", lambda_label(n, m), b.run()};
}

SuiteReport suite_solutions(const SuiteOptions& o) {
  int n = o.n, m = o.m;
  SuiteBuilder b;
  std::set<std::pair<long, long>> seen;  // k = -s/r in lowest terms
  for (int r = 1; r <= n; ++r)
    for (int s = 1; s <= m; ++s) {
      mpq_class k(-s, r);
      k.canonicalize();
      if (!seen.insert({k.get_num().get_si(), k.get_den().get_si()}).second) continue;
      Scalar ks(k);
      b.add("nontrivial[" + ks.str() + "]", "p_1 = ... = p_(n+m) = 0 has a nonzero solution at k = -s/r", [n, m, ks] {
        auto inst = power_sum_zero_instance(n, m, ks);
        std::string w = "x_1..x_" + std::to_string(inst.r) + " = y_1..y_" + std::to_string(inst.s) + " = z";
        for (const auto& res : inst.residues) w += "; " + res;
        return gate(inst.found && inst.solves, w);
      });
    }
  b.add("generic", "for n = m = 1 and generic k only the trivial solution exists", [] {
    Scalar c = generic_elimination_coefficient();
    Scalar k = Scalar::param(kParamK);
    return gate(c == k + Scalar(1), "after p1 = 0: p2 = (" + c.str() + ")*x^2");
  });
  return {"solutions", lambda_label(n, m), b.run()};
}

// ---- difference operators ---------------------------------------------------------

SuiteReport suite_macdonald(const SuiteOptions&) {
  SuiteBuilder b;
  for (int s = 1; s <= 4; ++s)
    for (int n = 0; n <= s; ++n) {
      int m = s - n;
      b.add("duality" + bracket({n, m}), "q <-> t with x <-> y maps D^(n,m) to D^(m,n)",
            [n, m] { return gate(duality_check(n, m), ""); });
    }
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}})
    b.add("root-system-form" + bracket({n, m}), "the root-system expression with t = q^k reproduces D^(n,m)", [n, m] {
      bool ok = rootsystem_form_check(n, m);
      return gate(ok, ok ? "" : root_system_form(n, m).str());
    });
  for (int n = 1; n <= 3; ++n)
    b.add("classical" + bracket({n}), "D^(n,0) is Macdonald's operator with x -> 1/x, and t^(n-1) times it at t -> 1/t",
          [n] {
            auto r = classical_reduction_check(n);
            return gate(r.inverted_coordinates && r.inverted_t,
                        std::string("x -> 1/x: ") + (r.inverted_coordinates ? "yes" : "no") +
                            ", t -> 1/t: " + (r.inverted_t ? "yes" : "no"));
          });
  b.add("constant[1,1]", "D^(1,1) applied to 1", [] {
    return Outcome{Status::Reported, render_rational(build_deformed_mr(1, 1).apply(Scalar(1)), difference_names(1, 1))};
  });
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}})
    b.add("p1-analogue" + bracket({n, m}), "coefficient c with D(sum x + c sum y) polynomial", [n, m] {
      auto r = deformed_p1_analogue(n, m);
      return Outcome{Status::Reported, "c = " + r.coefficient.str() + (r.polynomial_image ? ", image polynomial" : ", image not polynomial")};
    });
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}})
    b.add("differential-limit" + bracket({n, m}), "q = e^h, t = e^(kh): quadratic part of the h^1 term of the eigenvalue on x^a y^b",
          [n, m] {
            auto r = differential_limit(n, m);
            return Outcome{Status::Reported, render_rational(r.quadratic_part, r.names) +
                                                 (r.laplacian_symbol ? " (-1/2 times the deformed Laplacian symbol)" : "")};
          });
  return {"macdonald", "difference operators", b.run()};
}

}  // namespace

Scalar parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw UsageError("not a rational number: " + s);
  q.canonicalize();
  return Scalar(q);
}

std::shared_ptr<GRS> selected_system(const SuiteOptions& o) {
  std::shared_ptr<GRS> g;
  try {
    g = build_system(o.family, o.n, o.m);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.pin_k) g = g->specialize({{kParamK, *o.pin_k}});
  return g;
}

std::vector<std::string> suite_names() {
  return {"main-identity", "gauge",     "commute",    "commutator-relation",     "hc",       "bernoulli",
          "dimensions",    "poincare",  "super-jack", "solutions", "macdonald"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& o) {
  static const std::map<std::string, SuiteReport (*)(const SuiteOptions&)> table = {
      {"main-identity", suite_main_identity}, {"gauge", suite_gauge},         {"commute", suite_commute},
      {"commutator-relation", suite_commutator_relation},                 {"hc", suite_hc},               {"bernoulli", suite_bernoulli},
      {"dimensions", suite_dimensions},       {"poincare", suite_poincare},   {"super-jack", suite_super_jack},
      {"solutions", suite_solutions},         {"macdonald", suite_macdonald}};
  auto it = table.find(name);
  if (it == table.end()) throw UsageError("unknown suite: " + name);
  return it->second(o);
}

std::vector<std::string> object_names() {
  return {"integral", "hc-image", "jack", "super-jack", "newton", "defmr", "dimension"};
}

std::string compute_object(const std::string& name, const SuiteOptions& o) {
  auto need_p = [&] {
    if (!o.p) throw UsageError(name + " needs --p");
    if (*o.p < 1) throw UsageError("--p must be positive");
    return *o.p;
  };
  auto need_lambda = [&] {
    if (!o.lambda) throw UsageError(name + " needs --lambda");
    return *o.lambda;
  };
  if (name == "integral") {
    auto g = selected_system(o);
    require_classical(*g);
    IntegralFamily fam(g, o.model);
    return fam.integral(need_p()).str();
  }
  if (name == "hc-image") {
    auto g = selected_system(o);
    require_classical(*g);
    HCFamily hc(g);
    return to_string(hc.image(need_p()), lambda_names(g->dim()));
  }
  if (name == "jack") return to_string(jack_polynomial(need_lambda()), power_sum_names(kMaxVars));
  if (name == "super-jack") return to_string(super_jack(need_lambda(), o.n, o.m), super_names(o.n, o.m));
  if (name == "newton") return to_string(newton_deformed(o.n, o.m, need_p()), super_names(o.n, o.m));
  if (name == "defmr") return build_deformed_mr(o.n, o.m).str();
  if (name == "dimension") {
    if (!o.N) throw UsageError("dimension needs --N");
    return std::to_string(component_dimension(o.n, o.m, *o.N, o.pin_k));
  }
  throw UsageError("unknown object: " + name);
}

}  // namespace cms
