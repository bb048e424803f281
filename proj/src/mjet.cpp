#include "resurgix/mjet.hpp"
#include "resurgix/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace resurgix {

namespace {
std::mutex g_tab_mu;
std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const JetTable>> g_tabs;

void enumerate(unsigned nvars, unsigned deg, std::vector<uint8_t>& cur, unsigned pos,
               unsigned used, std::vector<std::vector<uint8_t>>& out) {
  if (pos == nvars) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e + used <= deg; ++e) {
    cur[pos] = static_cast<uint8_t>(e);
    enumerate(nvars, deg, cur, pos + 1, used + e, out);
  }
  cur[pos] = 0;
}
}  // namespace

std::shared_ptr<const JetTable> JetTable::get(unsigned nvars, unsigned deg) {
  std::lock_guard<std::mutex> lk(g_tab_mu);
  auto key = std::make_pair(nvars, deg);
  auto it = g_tabs.find(key);
  if (it != g_tabs.end()) return it->second;
  auto tab = std::make_shared<JetTable>();
  tab->nvars = nvars;
  tab->deg = deg;
  std::vector<uint8_t> cur(nvars, 0);
  enumerate(nvars, deg, cur, 0, 0, tab->expo);
  // sort graded-lex for stable ordering with constant first
  std::sort(tab->expo.begin(), tab->expo.end(), [](const auto& a, const auto& b) {
    unsigned da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    if (da != db) return da < db;
    return a < b;
  });
  std::map<std::vector<uint8_t>, int32_t> rank;
  for (std::size_t i = 0; i < tab->expo.size(); ++i) {
    rank[tab->expo[i]] = static_cast<int32_t>(i);
    unsigned d = 0;
    for (auto x : tab->expo[i]) d += x;
    tab->degree_of.push_back(d);
  }
  std::size_t n = tab->expo.size();
  tab->sum_index.assign(n * n, -1);
  std::vector<uint8_t> sum(nvars);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (tab->degree_of[i] + tab->degree_of[j] > deg) continue;
      for (unsigned v = 0; v < nvars; ++v)
        sum[v] = static_cast<uint8_t>(tab->expo[i][v] + tab->expo[j][v]);
      tab->sum_index[i * n + j] = rank.at(sum);
    }
  g_tabs[key] = tab;
  return tab;
}

int32_t JetTable::index_of(const std::vector<uint8_t>& e) const {
  unsigned d = 0;
  for (auto x : e) d += x;
  if (d > deg) return -1;
  for (std::size_t i = 0; i < expo.size(); ++i)
    if (expo[i] == e) return static_cast<int32_t>(i);
  return -1;
}

MJet::MJet(unsigned nvars, unsigned deg) : tab_(JetTable::get(nvars, deg)), c_(tab_->size()) {}

MJet MJet::constant(const Cplx& v, unsigned nvars, unsigned deg) {
  MJet j(nvars, deg);
  j.c_[0] = v;
  return j;
}

MJet MJet::variable(const Cplx& base, unsigned which, unsigned nvars, unsigned deg) {
  MJet j(nvars, deg);
  j.c_[0] = base;
  if (deg >= 1) {
    std::vector<uint8_t> e(nvars, 0);
    e[which] = 1;
    int32_t r = j.tab_->index_of(e);
    j.c_[static_cast<std::size_t>(r)] = Cplx(1);
  }
  return j;
}

Cplx MJet::taylor_coeff(const std::vector<uint8_t>& alpha) const {
  int32_t r = tab_->index_of(alpha);
  if (r < 0) return Cplx();
  return c_[static_cast<std::size_t>(r)];
}

Cplx MJet::deriv(const std::vector<uint8_t>& alpha) const {
  Cplx c = taylor_coeff(alpha);
  Real f = 1;
  for (auto a : alpha)
    for (unsigned j = 2; j <= a; ++j) f *= j;
  return c * Cplx(f);
}

MJet& MJet::operator+=(const MJet& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

MJet& MJet::operator-=(const MJet& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

MJet MJet::operator-() const {
  MJet r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

MJet MJet::truncated(unsigned deg) const {
  MJet r(nvars(), deg);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (tab_->degree_of[i] > deg) continue;
    int32_t ri = r.tab_->index_of(tab_->expo[i]);
    if (ri >= 0) r.c_[static_cast<std::size_t>(ri)] = c_[i];
  }
  return r;
}

MJet operator*(const MJet& a, const MJet& b) {
  MJet r(a.nvars(), a.deg());
  const auto& tab = *a.tab_;
  std::size_t n = tab.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      int32_t k = tab.sum_index[i * n + j];
      if (k < 0) continue;
      if (b.c_[j].is_zero()) continue;
      r.c_[static_cast<std::size_t>(k)] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

MJet operator*(const Cplx& s, MJet a) {
  for (auto& x : a.c_) x *= s;
  return a;
}

MJet jet_apply(const std::vector<Cplx>& t, const MJet& u) {
  // nilpotent part
  MJet w = u;
  w.at(0) = Cplx();
  MJet res = MJet::constant(t.empty() ? Cplx() : t[std::min<std::size_t>(t.size() - 1, u.deg())],
                            u.nvars(), u.deg());
  for (std::size_t k = std::min<std::size_t>(t.size() - 1, u.deg()); k-- > 0;) {
    res = res * w;
    res.at(0) += t[k];
  }
  return res;
}

std::vector<Cplx> taylor_exp(const Cplx& u0, unsigned deg) {
  std::vector<Cplx> t(deg + 1);
  t[0] = exp(u0);
  for (unsigned k = 1; k <= deg; ++k) t[k] = t[k - 1] / Cplx(Real(k));
  return t;
}

std::vector<Cplx> taylor_log(const Cplx& u0, long branch, unsigned deg) {
  if (u0.is_zero()) throw NumericError("log jet at 0");
  std::vector<Cplx> t(deg + 1);
  t[0] = log_branch(u0, branch);
  Cplx inv = Cplx(1) / u0, p = inv;
  for (unsigned k = 1; k <= deg; ++k) {
    // (-1)^{k-1}/(k u0^k)
    t[k] = ((k % 2) ? p : -p) / Cplx(Real(k));
    p *= inv;
  }
  return t;
}

std::vector<Cplx> taylor_recip(const Cplx& u0, unsigned deg) {
  if (u0.is_zero()) throw NumericError("reciprocal jet at 0");
  std::vector<Cplx> t(deg + 1);
  Cplx inv = Cplx(1) / u0;
  t[0] = inv;
  for (unsigned k = 1; k <= deg; ++k) t[k] = -t[k - 1] * inv;
  return t;
}

std::vector<Cplx> taylor_sqrt(const Cplx& u0, unsigned deg) {
  if (u0.is_zero()) throw NumericError("sqrt jet at 0");
  std::vector<Cplx> t(deg + 1);
  t[0] = sqrt(u0);
  // t_k = t_{k-1} * (3/2 - k) / (k u0)
  for (unsigned k = 1; k <= deg; ++k)
    t[k] = t[k - 1] * Cplx((Real(3) / 2 - Real(k)) / Real(k)) / u0;
  return t;
}

std::vector<Cplx> taylor_pow_int(const Cplx& u0, long m, unsigned deg) {
  std::vector<Cplx> t(deg + 1);
  if (u0.is_zero()) {
    if (m < 0) throw NumericError("negative power jet at 0");
    for (unsigned k = 0; k <= deg; ++k)
      t[k] = (static_cast<long>(k) == m) ? Cplx(1) : Cplx();
    return t;
  }
  t[0] = pow_int(u0, m);
  Cplx inv = Cplx(1) / u0;
  for (unsigned k = 1; k <= deg; ++k)
    t[k] = t[k - 1] * Cplx(Real(m) - Real(k - 1)) * inv / Cplx(Real(k));
  return t;
}

std::vector<Cplx> taylor_li2(const Cplx& u0, long nb, long mb, unsigned deg) {
  std::vector<Cplx> t(deg + 1);
  t[0] = li2_branch(u0, nb, mb);
  if (deg == 0) return t;
  // Li2'(z) = (-log(1-z) + nb*2*pi*i)/z ; form the series of the derivative
  // around u0 and integrate coefficientwise.
  Cplx one_minus = Cplx(1) - u0;
  if (one_minus.is_zero() || u0.is_zero()) throw NumericError("li2 jet at branch point");
  // series of log(1-u0-w) in w to order deg-1
  std::vector<Cplx> lg = taylor_log(one_minus, 0, deg - 1);
  // substitute inner (1-u0-w): w-coefficient signs alternate: log(one_minus - w)
  // taylor_log gives coefficients in (u - u0'); with u = one_minus - w the k-th
  // coefficient picks up (-1)^k.
  for (unsigned k = 1; k < lg.size(); k += 2) lg[k] = -lg[k];
  FormalSeries logser{std::vector<Cplx>(lg.begin(), lg.end())};
  std::vector<Cplx> rc = taylor_recip(u0, deg - 1);
  FormalSeries recser{std::vector<Cplx>(rc.begin(), rc.end())};
  FormalSeries deriv = (Cplx(-1) * logser);
  if (nb != 0) deriv[0] += Cplx(Real(nb)) * Cplx(Real(0), two_pi());
  deriv = deriv * recser;
  for (unsigned k = 1; k <= deg; ++k) t[k] = deriv[k - 1] / Cplx(Real(k));
  return t;
}

}  // namespace resurgix
