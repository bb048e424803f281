#include "resurgix/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace resurgix {

namespace mp = boost::multiprecision;

LaurentPoly LaurentPoly::constant(unsigned nvars, Int c) {
  LaurentPoly p(nvars);
  if (c != 0) p.t_[Expo(nvars, 0)] = std::move(c);
  return p;
}

LaurentPoly LaurentPoly::monomial(unsigned nvars, const Expo& e, Int c) {
  LaurentPoly p(nvars);
  if (c != 0) p.t_[e] = std::move(c);
  return p;
}

LaurentPoly LaurentPoly::variable(unsigned nvars, unsigned which, int power) {
  Expo e(nvars, 0);
  e[which] = power;
  return monomial(nvars, e);
}

bool LaurentPoly::is_constant() const {
  if (t_.empty()) return true;
  if (t_.size() > 1) return false;
  const Expo& e = t_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void LaurentPoly::add_term(const Expo& e, const Int& c) {
  if (c == 0) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(n_);
  for (auto& [e, c] : t_) r.t_[e] = -c;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (auto& [e, c] : b.t_) r.add_term(e, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (auto& [e, c] : b.t_) r.add_term(e, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(a.n_);
  LaurentPoly::Expo e(a.n_);
  for (auto& [ea, ca] : a.t_)
    for (auto& [eb, cb] : b.t_) {
      for (unsigned i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly::Expo LaurentPoly::min_exponents() const {
  Expo m(n_, 0);
  bool first = true;
  for (auto& [e, c] : t_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (unsigned i = 0; i < n_; ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

LaurentPoly LaurentPoly::shifted(const Expo& s) const {
  LaurentPoly r(n_);
  Expo e(n_);
  for (auto& [e0, c] : t_) {
    for (unsigned i = 0; i < n_; ++i) e[i] = e0[i] + s[i];
    r.t_[e] = c;
  }
  return r;
}

bool LaurentPoly::is_polynomial() const {
  for (auto& [e, c] : t_)
    for (int x : e)
      if (x < 0) return false;
  return true;
}

Int LaurentPoly::int_content() const {
  Int g = 0;
  for (auto& [e, c] : t_) {
    g = mp::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Cplx LaurentPoly::eval(const std::vector<Cplx>& x) const {
  Cplx acc;
  for (auto& [e, c] : t_) {
    Cplx m(to_real(c));
    for (unsigned i = 0; i < n_; ++i)
      if (e[i] != 0) m *= pow_int(x[i], e[i]);
    acc += m;
  }
  return acc;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : t_) {
    Int ac = c < 0 ? Int(-c) : c;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool any_var = false;
    std::ostringstream vars;
    for (unsigned i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (any_var) vars << "*";
      any_var = true;
      vars << names.at(i);
      if (e[i] != 1) vars << "^" << e[i];
    }
    if (!any_var) {
      os << ac.str();
    } else {
      if (ac != 1) os << ac.str() << "*";
      os << vars.str();
    }
  }
  return os.str();
}

// ------------------------- polynomial gcd ---------------------------------

namespace {

int degree_in(const LaurentPoly& p, unsigned v) {
  int d = -1;
  for (auto& [e, c] : p.terms()) d = std::max(d, e[v]);
  return d;
}

// Highest-index variable actually present in either polynomial; -1 if none.
int pick_var(const LaurentPoly& a, const LaurentPoly& b) {
  for (int v = static_cast<int>(a.nvars()) - 1; v >= 0; --v) {
    if (degree_in(a, static_cast<unsigned>(v)) > 0 || degree_in(b, static_cast<unsigned>(v)) > 0)
      return v;
  }
  return -1;
}

// Coefficient of v^k (a polynomial with v-exponent zeroed).
LaurentPoly coeff_of(const LaurentPoly& p, unsigned v, int k) {
  LaurentPoly r(p.nvars());
  for (auto& [e, c] : p.terms()) {
    if (e[v] != k) continue;
    auto e2 = e;
    e2[v] = 0;
    r.add_term(e2, c);
  }
  return r;
}

LaurentPoly times_vpow(const LaurentPoly& p, unsigned v, int k) {
  LaurentPoly::Expo s(p.nvars(), 0);
  s[v] = k;
  return p.shifted(s);
}

LaurentPoly sign_normalized(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  if (p.terms().begin()->second < 0) return -p;
  return p;
}

}  // namespace

LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ZeroDenominator("exact division by zero polynomial");
  if (a.is_zero()) return LaurentPoly(a.nvars());
  if (b.is_constant()) {
    Int d = b.terms().begin()->second;
    LaurentPoly r(a.nvars());
    for (auto& [e, c] : a.terms()) {
      if (c % d != 0) throw NumericError("polynomial division not exact (constant)");
      r.add_term(e, c / d);
    }
    return r;
  }
  int vi = pick_var(b, b);
  unsigned v = static_cast<unsigned>(vi);
  int db = degree_in(b, v);
  LaurentPoly lcb = coeff_of(b, v, db);
  LaurentPoly rem = a, quot(a.nvars());
  int guard = 0;
  while (!rem.is_zero()) {
    int dr = degree_in(rem, v);
    if (dr < db) throw NumericError("polynomial division not exact (remainder)");
    LaurentPoly qc = poly_exact_div(coeff_of(rem, v, dr), lcb);
    LaurentPoly qterm = times_vpow(qc, v, dr - db);
    quot = quot + qterm;
    rem = rem - qterm * b;
    if (++guard > 10000) throw NumericError("division runaway");
  }
  return quot;
}

namespace {

// Content of p with respect to v: gcd of the v-coefficients.
LaurentPoly content_wrt(const LaurentPoly& p, unsigned v) {
  LaurentPoly g(p.nvars());
  int d = degree_in(p, v);
  for (int k = 0; k <= d; ++k) {
    LaurentPoly c = coeff_of(p, v, k);
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_constant() && !g.is_zero() && g.terms().begin()->second == 1) break;
  }
  return g;
}

// Pseudo-remainder of a by b in variable v.
LaurentPoly prem(const LaurentPoly& a, const LaurentPoly& b, unsigned v) {
  int da = degree_in(a, v), db = degree_in(b, v);
  LaurentPoly lcb = coeff_of(b, v, db);
  LaurentPoly r = a;
  int e = da - db + 1;
  while (!r.is_zero()) {
    int dr = degree_in(r, v);
    if (dr < db) break;
    LaurentPoly lcr = coeff_of(r, v, dr);
    r = lcb * r - times_vpow(lcr, v, dr - db) * b;
    --e;
  }
  for (; e > 0; --e) r = r * lcb;
  return r;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (!a.is_polynomial() || !b.is_polynomial())
    throw NumericError("poly_gcd requires non-negative exponents");
  if (a.is_zero()) return sign_normalized(b);
  if (b.is_zero()) return sign_normalized(a);
  if (a.is_constant() || b.is_constant()) {
    Int g = mp::gcd(a.int_content(), b.int_content());
    return LaurentPoly::constant(a.nvars(), g);
  }
  int vi = pick_var(a, b);
  if (vi < 0) {
    Int g = mp::gcd(a.int_content(), b.int_content());
    return LaurentPoly::constant(a.nvars(), g);
  }
  unsigned v = static_cast<unsigned>(vi);
  if (degree_in(a, v) == 0 || degree_in(b, v) == 0) {
    // v appears in only one input: gcd divides the content of the other
    const LaurentPoly& with = degree_in(a, v) > 0 ? a : b;
    const LaurentPoly& without = degree_in(a, v) > 0 ? b : a;
    return poly_gcd(content_wrt(with, v), without);
  }
  LaurentPoly ca = content_wrt(a, v), cb = content_wrt(b, v);
  LaurentPoly pa = poly_exact_div(a, ca), pb = poly_exact_div(b, cb);
  LaurentPoly cg = poly_gcd(ca, cb);
  // primitive PRS
  LaurentPoly P = pa, Q = pb;
  if (degree_in(P, v) < degree_in(Q, v)) std::swap(P, Q);
  int guard = 0;
  for (;;) {
    LaurentPoly R = prem(P, Q, v);
    if (R.is_zero()) break;
    // primitive part
    LaurentPoly cr = content_wrt(R, v);
    R = poly_exact_div(R, cr);
    Int ic = R.int_content();
    if (ic > 1) R = poly_exact_div(R, LaurentPoly::constant(R.nvars(), ic));
    P = Q;
    Q = R;
    if (degree_in(Q, v) == 0) {
      // gcd of primitive parts is trivial in v
      Q = LaurentPoly::constant(a.nvars(), 1);
      break;
    }
    if (++guard > 1000) throw NumericError("gcd runaway");
  }
  // Q is the gcd of the primitive parts up to content in v
  LaurentPoly q = Q;
  LaurentPoly cq = content_wrt(q, v);
  if (!cq.is_constant()) q = poly_exact_div(q, cq);
  Int icq = q.int_content();
  if (icq > 1) q = poly_exact_div(q, LaurentPoly::constant(q.nvars(), icq));
  return sign_normalized(cg * q);
}

LaurentPoly parse_monomial(const std::string& text, const std::vector<std::string>& names) {
  unsigned n = static_cast<unsigned>(names.size());
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw NumericError("empty monomial");
  Int coef = 1;
  std::size_t i = 0;
  if (s[0] == '-') {
    coef = -1;
    i = 1;
  } else if (s[0] == '+') {
    i = 1;
  }
  LaurentPoly::Expo e(n, 0);
  bool expect_factor = true;
  while (i < s.size()) {
    if (s[i] == '*') {
      ++i;
      expect_factor = true;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      coef *= Int(s.substr(i, j - i));
      i = j;
      expect_factor = false;
      continue;
    }
    // variable name: longest match
    int best = -1;
    std::size_t best_len = 0;
    for (unsigned v = 0; v < n; ++v) {
      const std::string& nm = names[v];
      if (s.compare(i, nm.size(), nm) == 0 && nm.size() > best_len) {
        best = static_cast<int>(v);
        best_len = nm.size();
      }
    }
    if (best < 0) throw NumericError("unknown variable in monomial: " + s.substr(i));
    i += best_len;
    int power = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      int sign = 1;
      if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        if (s[i] == '-') sign = -1;
        ++i;
      }
      std::size_t j = i;
      int val = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        val = val * 10 + (s[j] - '0');
        ++j;
      }
      if (j == i) throw NumericError("missing exponent in monomial");
      power = sign * val;
      i = j;
    }
    e[static_cast<unsigned>(best)] += power;
    expect_factor = false;
  }
  (void)expect_factor;
  return LaurentPoly::monomial(n, e, coef);
}

// --------------------------- LaurentRational -------------------------------

LaurentRational::LaurentRational(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominator("zero denominator");
}

LaurentRational LaurentRational::from_poly(LaurentPoly p) {
  unsigned n = p.nvars();
  return LaurentRational(std::move(p), LaurentPoly::constant(n, 1));
}

LaurentRational LaurentRational::constant(unsigned nvars, Int c) {
  return LaurentRational(LaurentPoly::constant(nvars, std::move(c)),
                         LaurentPoly::constant(nvars, 1));
}

LaurentRational LaurentRational::canonicalized() const {
  if (canon_) return *this;
  LaurentRational r = *this;
  if (r.num_.is_zero()) {
    r.num_ = LaurentPoly(num_.nvars());
    r.den_ = LaurentPoly::constant(num_.nvars(), 1);
    r.canon_ = true;
    return r;
  }
  unsigned n = num_.nvars();
  // lift both to true polynomials: divide by x^{min} separately, tracking the
  // net monomial on the numerator side.
  auto mn = r.num_.min_exponents();
  auto md = r.den_.min_exponents();
  LaurentPoly::Expo neg_mn(n), neg_md(n), net(n);
  for (unsigned i = 0; i < n; ++i) {
    neg_mn[i] = -mn[i];
    neg_md[i] = -md[i];
    net[i] = mn[i] - md[i];
  }
  LaurentPoly np = r.num_.shifted(neg_mn);
  LaurentPoly dp = r.den_.shifted(neg_md);
  LaurentPoly g = poly_gcd(np, dp);
  if (!(g.is_constant() && !g.is_zero() && g.terms().begin()->second == 1)) {
    np = poly_exact_div(np, g);
    dp = poly_exact_div(dp, g);
  }
  // integer content
  Int ic = mp::gcd(np.int_content(), dp.int_content());
  if (ic > 1) {
    np = poly_exact_div(np, LaurentPoly::constant(n, ic));
    dp = poly_exact_div(dp, LaurentPoly::constant(n, ic));
  }
  // re-establish denominator min-exponent 0 (division may have shifted it)
  auto md2 = dp.min_exponents();
  bool shift_needed = false;
  for (unsigned i = 0; i < n; ++i)
    if (md2[i] != 0) shift_needed = true;
  if (shift_needed) {
    LaurentPoly::Expo neg(n);
    for (unsigned i = 0; i < n; ++i) neg[i] = -md2[i];
    dp = dp.shifted(neg);
    for (unsigned i = 0; i < n; ++i) net[i] += md2[i];
  }
  // put the net monomial on the numerator
  np = np.shifted(net);
  // sign: least denominator monomial positive
  if (dp.terms().begin()->second < 0) {
    np = -np;
    dp = -dp;
  }
  r.num_ = std::move(np);
  r.den_ = std::move(dp);
  r.canon_ = true;
  return r;
}

LaurentRational operator+(const LaurentRational& a, const LaurentRational& b) {
  return LaurentRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LaurentRational operator-(const LaurentRational& a, const LaurentRational& b) {
  return LaurentRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

LaurentRational operator*(const LaurentRational& a, const LaurentRational& b) {
  return LaurentRational(a.num_ * b.num_, a.den_ * b.den_);
}

LaurentRational operator/(const LaurentRational& a, const LaurentRational& b) {
  if (b.num_.is_zero()) throw ZeroDenominator("division by zero rational");
  return LaurentRational(a.num_ * b.den_, a.den_ * b.num_);
}

LaurentRational LaurentRational::operator-() const {
  LaurentRational r(-num_, den_);
  return r;
}

bool operator==(const LaurentRational& a, const LaurentRational& b) {
  LaurentRational ca = a.canonicalized(), cb = b.canonicalized();
  return ca.num() == cb.num() && ca.den() == cb.den();
}

Cplx LaurentRational::eval(const std::vector<Cplx>& x) const {
  Cplx d = den_.eval(x);
  if (d.is_zero()) throw ZeroDenominator("denominator vanishes at evaluation point");
  return num_.eval(x) / d;
}

std::string LaurentRational::str(const std::vector<std::string>& names) const {
  LaurentRational c = canonicalized();
  bool den_is_one = c.den().is_constant() && !c.den().is_zero() &&
                    c.den().terms().begin()->second == 1;
  if (den_is_one) return c.num().str(names);
  return "(" + c.num().str(names) + ") / (" + c.den().str(names) + ")";
}

}  // namespace resurgix
