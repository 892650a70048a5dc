#include "cms/rootsys.hpp"

#include <stdexcept>

namespace cms {

namespace {

GVec unit(int dim, int i, const Scalar& c = Scalar(1)) {
  GVec v(dim);
  v[i] = c;
  return v;
}

GVec add(const GVec& a, const GVec& b, const Scalar& s = Scalar(1)) {
  GVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i] * s;
  return r;
}

GVec neg(const GVec& a) {
  GVec r = a;
  for (auto& x : r) x = -x;
  return r;
}

Matrix diag(const std::vector<Scalar>& d) {
  Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

bool first_nonzero_positive(const GVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) {
      mpq_class q = x.to_rational();
      return sgn(q) > 0;
    }
  return false;
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::BC: return "BC";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::C0: return "C0";
    case Family::D: return "D";
    case Family::AB13: return "AB13";
    case Family::G12: return "G12";
    case Family::D21: return "D21";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (Family f : {Family::A, Family::BC, Family::B, Family::C, Family::C0, Family::D, Family::AB13, Family::G12,
                   Family::D21})
    if (s == family_name(f)) return f;
  throw std::invalid_argument("unknown system family: " + s);
}

bool is_classical(Family f) { return f != Family::AB13 && f != Family::G12 && f != Family::D21; }

std::string GRS::label() const {
  if (!is_classical(family_)) return family_name(family_);
  return std::string(family_name(family_)) + "(" + std::to_string(n_) + "," + std::to_string(m_) + ")";
}

std::vector<int> GRS::positive_roots() const {
  std::vector<int> out;
  for (size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i].positive) out.push_back(static_cast<int>(i));
  return out;
}

int GRS::find_root(const GVec& v) const {
  for (size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i].v == v) return static_cast<int>(i);
  return -1;
}

Scalar GRS::multiplicity(const GVec& v) const {
  int i = find_root(v);
  return i < 0 ? Scalar() : roots_[i].mult;
}

const Matrix& GRS::form(Form f) const {
  switch (f) {
    case Form::Deformed: return b_;
    case Form::Original: return b0_;
    default: return eu_;
  }
}

Scalar GRS::pairing(const GVec& u, const GVec& v, Form f) const {
  if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("pairing: dimension mismatch");
  const Matrix& b = form(f);
  Scalar s;
  for (int i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      if (!v[j].is_zero() && !b(i, j).is_zero()) s += u[i] * b(i, j) * v[j];
  }
  return s;
}

GVec GRS::reflect(const GVec& a, const GVec& v, Form f) const {
  Scalar aa = pairing(a, a, f);
  if (aa.is_zero()) throw std::domain_error("reflect: isotropic vector");
  return add(v, a, -(Scalar(2) * pairing(a, v, f) / aa));
}

std::vector<int> GRS::lattice_coords(const GVec& v) const {
  std::vector<int> out(dim_);
  for (int t = 0; t < dim_; ++t) {
    Scalar c;
    for (int j = 0; j < dim_; ++j) c += basis_inv_(t, j) * v[j];
    mpq_class q = c.to_rational();
    if (q.get_den() != 1) throw std::invalid_argument("vector not in the root lattice: " + to_string(v));
    out[t] = static_cast<int>(q.get_num().get_si());
  }
  return out;
}

GVec GRS::rho() const {
  GVec r(dim_);
  for (const auto& a : roots_)
    if (a.positive) r = add(r, a.v, a.mult);
  return r;
}

std::vector<GVec> GRS::homogeneous_orbit() const {
  if (!is_classical(family_)) throw std::invalid_argument("homogeneous orbit: only classical families");
  std::vector<GVec> out;
  for (int i = 0; i < dim_; ++i) out.push_back(unit(dim_, i));
  if (family_ != Family::A)
    for (int i = 0; i < dim_; ++i) out.push_back(unit(dim_, i, Scalar(-1)));
  return out;
}

void GRS::finish() {
  Matrix bm(dim_, dim_);
  for (int t = 0; t < dim_; ++t)
    for (int j = 0; j < dim_; ++j) bm(j, t) = basis_[t][j];
  basis_inv_ = Matrix(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    std::vector<Scalar> e(dim_);
    e[j] = Scalar(1);
    auto x = solve(bm, e);
    if (!x) throw std::logic_error("lattice basis is singular");
    for (int t = 0; t < dim_; ++t) basis_inv_(t, j) = (*x)[t];
  }
  eu_ = diag(std::vector<Scalar>(dim_, Scalar(1)));
  geo_ = std::make_shared<FactorBasis>(Model::Geometric, dim_);
  aff_ = std::make_shared<FactorBasis>(Model::Affine, dim_);
  for (auto& r : roots_) {
    r.lattice = lattice_coords(r.v);
    r.positive = first_nonzero_positive(r.v);
    if (r.positive) {
      geo_->add_direction(r.lattice);
      aff_->add_direction(r.lattice);
    }
  }
  std::vector<int> ps;
  auto note = [&](const Scalar& s) {
    for (int p = 0; p < kParamCount; ++p)
      if (s.uses_param(p) && std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
  };
  for (const auto& r : roots_) note(r.mult);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) note(b_(i, j));
  std::sort(ps.begin(), ps.end());
  params_ = ps;
}

std::shared_ptr<GRS> GRS::specialize(const std::map<int, Scalar>& values) const {
  auto g = std::make_shared<GRS>(*this);
  for (auto& r : g->roots_) r.mult = r.mult.substitute(values);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) g->b_(i, j) = b_(i, j).substitute(values);
  std::vector<int> ps;
  for (int p : params_)
    if (!values.count(p)) ps.push_back(p);
  g->params_ = ps;
  return g;
}

std::shared_ptr<GRS> GRS::with_multiplicity(int index, const Scalar& value) const {
  auto g = std::make_shared<GRS>(*this);
  const Root& target = roots_.at(index);
  for (auto& r : g->roots_)
    if (r.mult == target.mult && r.imaginary == target.imaginary) r.mult = value;
  return g;
}

std::shared_ptr<GRS> build_system(Family family, int n, int m) {
  auto g = std::make_shared<GRS>();
  g->family_ = family;
  const Scalar k = Scalar::param(kParamK);
  auto push = [&](const GVec& v, const Scalar& mult, bool imaginary) {
    if (mult.is_zero()) return;
    g->roots_.push_back({v, {}, imaginary, false, mult});
    g->roots_.push_back({neg(v), {}, imaginary, false, mult});
  };
  switch (family) {
    case Family::A: {
      if (n < 1 || m < 0 || n + m < 2) throw std::invalid_argument("A: need n >= 1, m >= 0, n + m >= 2");
      g->n_ = n;
      g->m_ = m;
      int d = g->dim_ = n + m;
      std::vector<Scalar> bd, b0;
      for (int i = 0; i < d; ++i) {
        bd.push_back(i < n ? Scalar(1) : k);
        b0.push_back(i < n ? Scalar(1) : Scalar(-1));
      }
      g->b_ = diag(bd);
      g->b0_ = diag(b0);
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          GVec v = add(unit(d, i), unit(d, j), Scalar(-1));
          bool ii = i < n, jj = j < n;
          if (ii && jj) push(v, k, false);
          else if (!ii && !jj) push(v, k.inverse(), false);
          else push(v, Scalar(1), true);
        }
      for (int i = 0; i < d; ++i) g->basis_.push_back(unit(d, i));
      break;
    }
    case Family::BC:
    case Family::B:
    case Family::C:
    case Family::C0:
    case Family::D: {
      if (n < 0 || m < 0 || n + m < 1) throw std::invalid_argument("BC: need n, m >= 0, n + m >= 1");
      if (family == Family::C0 && n != 1) throw std::invalid_argument("C0: requires n = 1");
      if (family == Family::D && n < 2) throw std::invalid_argument("D: requires n >= 2");
      g->n_ = n;
      g->m_ = m;
      int d = g->dim_ = n + m;
      Scalar p = Scalar::param(kParamP), q = Scalar::param(kParamQ);
      if (family == Family::B || family == Family::D || family == Family::C0) q = Scalar();
      if (family == Family::C || family == Family::D || family == Family::C0) p = Scalar();
      Scalar r = p / k, s = (Scalar(2) * q + Scalar(1) - k) / (Scalar(2) * k);
      std::vector<Scalar> bd, b0;
      for (int i = 0; i < d; ++i) {
        bd.push_back(i < n ? Scalar(1) : k);
        b0.push_back(i < n ? Scalar(1) : Scalar(-1));
      }
      g->b_ = diag(bd);
      g->b0_ = diag(b0);
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          bool ii = i < n, jj = j < n;
          Scalar mult = (ii && jj) ? k : (!ii && !jj) ? k.inverse() : Scalar(1);
          push(add(unit(d, i), unit(d, j), Scalar(-1)), mult, ii != jj);
          push(add(unit(d, i), unit(d, j)), mult, ii != jj);
        }
      for (int i = 0; i < d; ++i) {
        push(unit(d, i), i < n ? p : r, false);
        push(unit(d, i, Scalar(2)), i < n ? q : s, false);
      }
      for (int i = 0; i < d; ++i) g->basis_.push_back(unit(d, i));
      break;
    }
    case Family::AB13: {
      int d = g->dim_ = 4;
      g->b_ = diag({1, 1, 1, Scalar(3) * k});
      g->b0_ = diag({1, 1, 1, -3});
      Scalar a = (Scalar(3) * k + Scalar(1)) / Scalar(2);
      Scalar b = (Scalar(1) - k) / (Scalar(2) * k);
      Scalar c = (Scalar(3) * k - Scalar(1)) / Scalar(4);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          push(add(unit(d, i), unit(d, j), Scalar(-1)), c, false);
          push(add(unit(d, i), unit(d, j)), c, false);
        }
      for (int i = 0; i < 3; ++i) push(unit(d, i), a, false);
      push(unit(d, 3), b, false);
      Scalar half = Scalar::rational(1, 2);
      for (int s = 0; s < 8; ++s) {
        GVec v{half, s & 1 ? -half : half, s & 2 ? -half : half, s & 4 ? -half : half};
        push(v, Scalar(1), true);
      }
      for (int i = 0; i < 3; ++i) g->basis_.push_back(unit(d, i));
      g->basis_.push_back({half, half, half, half});
      break;
    }
    case Family::G12: {
      // Coordinates with respect to e1, e2, e4; e3 = -e1 - e2.
      int d = g->dim_ = 3;
      Matrix b(3, 3), b0(3, 3);
      Scalar mh = Scalar::rational(-1, 2);
      b(0, 0) = 1; b(1, 1) = 1; b(0, 1) = mh; b(1, 0) = mh; b(2, 2) = k;
      b0(0, 0) = 2; b0(1, 1) = 2; b0(0, 1) = -1; b0(1, 0) = -1; b0(2, 2) = -2;
      g->b_ = b;
      g->b0_ = b0;
      Scalar a = Scalar(1) + Scalar(2) * k;
      Scalar bb = (Scalar(2) * k - Scalar(1)) / Scalar(3);
      Scalar c = k.inverse() + Scalar(2);
      Scalar dd = (Scalar(2) * k).inverse() - Scalar::rational(1, 2);
      std::vector<GVec> e = {unit(d, 0), unit(d, 1), GVec{-1, -1, 0}};
      GVec e4 = unit(d, 2);
      for (int i = 0; i < 3; ++i) push(e[i], a, false);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) push(add(e[i], e[j], Scalar(-1)), bb, false);
      push(e4, c, false);
      push(add(e4, e4), dd, false);
      for (int i = 0; i < 3; ++i) {
        push(add(e[i], e4), Scalar(1), true);
        push(add(e[i], e4, Scalar(-1)), Scalar(1), true);
      }
      for (int i = 0; i < 3; ++i) g->basis_.push_back(unit(d, i));
      break;
    }
    case Family::D21: {
      int d = g->dim_ = 3;
      Scalar l1 = Scalar::param(kParamL1), l2 = Scalar::param(kParamL2), l3 = Scalar::param(kParamL3);
      g->b_ = diag({l1, l2, l3});
      g->b0_ = g->b_;
      Scalar kk = l1 + l2 + l3 - Scalar(1);
      std::vector<Scalar> ls{l1, l2, l3};
      for (int i = 0; i < 3; ++i) push(unit(d, i, Scalar(2)), (kk + Scalar(1)) / (Scalar(2) * ls[i]) - Scalar(1), false);
      for (int s = 0; s < 4; ++s) push(GVec{1, s & 1 ? -1 : 1, s & 2 ? -1 : 1}, Scalar(1), true);
      g->basis_ = {GVec{1, 1, 1}, GVec{1, 1, -1}, GVec{1, -1, 1}};
      break;
    }
  }
  g->finish();
  return g;
}

std::string to_string(const GVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace cms
