#include "knots/hn.hpp"

#include <algorithm>
#include <sstream>

namespace knots {

namespace {

std::string half_str(long long h) {
  if (h % 2 == 0) return std::to_string(h / 2);
  return std::to_string(h) + "/2";
}

}  // namespace

IuInterval IuInterval::from_u(const UInterval& u) {
  IuInterval r;
  r.lo2 = 2 * u.lo;
  if (u.hi) r.hi2 = 2 * *u.hi;
  return r;
}

std::string IuInterval::str() const {
  std::ostringstream os;
  os << (lo2 ? "[" + half_str(*lo2) : std::string("(-inf"));
  os << ',';
  os << (hi2 ? half_str(*hi2) + "]" : std::string("inf)"));
  return os.str();
}

IuInterval operator+(const IuInterval& a, const IuInterval& b) {
  IuInterval r;
  if (a.lo2 && b.lo2) r.lo2 = *a.lo2 + *b.lo2;
  if (a.hi2 && b.hi2) r.hi2 = *a.hi2 + *b.hi2;
  return r;
}

IuInterval operator-(const IuInterval& a) {
  IuInterval r;
  if (a.hi2) r.lo2 = -*a.hi2;
  if (a.lo2) r.hi2 = -*a.lo2;
  return r;
}

IuInterval abs_diff(const IuInterval& a, const IuInterval& b) {
  IuInterval r;
  long long lo = 0;
  if (b.lo2 && a.hi2) lo = std::max(lo, *b.lo2 - *a.hi2);
  if (a.lo2 && b.hi2) lo = std::max(lo, *a.lo2 - *b.hi2);
  r.lo2 = lo;
  if (a.lo2 && a.hi2 && b.lo2 && b.hi2)
    r.hi2 = std::max(*a.hi2 - *b.lo2, *b.hi2 - *a.lo2);
  return r;
}

long long forced_gap2(const IuInterval& a, const IuInterval& b) {
  return *abs_diff(a, b).lo2;
}

namespace {

UInterval oracle_at(const UOracle& oracle, const Diagram& sm, CrossingId at) {
  try {
    return oracle(sm, at);
  } catch (const std::exception& e) {
    throw Error("iu oracle failed at crossing " + std::to_string(at) + ": " + e.what());
  }
}

}  // namespace

IuValue iu(const Diagram& d, const UOracle& oracle, const UInterval& u_of_link) {
  IuValue v;
  v.total = IuInterval::exact2(0);
  IuInterval base = IuInterval::from_u(u_of_link);
  for (const auto& [id, c] : d.crossings) {
    IuTerm t;
    t.crossing = id;
    t.sign = sign_of(c);
    t.u = oracle_at(oracle, smooth(d, id), id);
    IuInterval gap = abs_diff(IuInterval::from_u(t.u), base);
    t.contribution = t.sign > 0 ? gap : -gap;
    v.total = v.total + t.contribution;
    v.terms.push_back(std::move(t));
  }
  return v;
}

IuValue iu_eps_delta(const Diagram& d, int eps, int delta, const UOracle& oracle,
                     const UInterval& u_of_link) {
  if (eps < -1 || eps > 1 || delta < -1 || delta > 1)
    throw DiagramError("iu variant: eps and delta must be in {-1,0,+1}");
  IuValue v = iu(d, oracle, u_of_link);
  // each crossing also contributes eps * (1 + 3 * delta * sign) / 2
  for (IuTerm& t : v.terms) {
    IuInterval shift = IuInterval::exact2(eps * (1 + 3 * delta * t.sign));
    t.contribution = t.contribution + shift;
    v.total = v.total + shift;
  }
  return v;
}

IuValue iu_prime(const Diagram& d, const UOracle& oracle, const UInterval& u_of_link) {
  IuValue v;
  v.total = IuInterval::exact2(0);
  IuInterval base = IuInterval::from_u(u_of_link);
  ComponentLabeling comps = components(d);
  for (const auto& [id, c] : d.crossings) {
    IuTerm t;
    t.crossing = id;
    t.sign = sign_of(c);
    t.u = oracle_at(oracle, smooth(d, id), id);
    IuInterval uv = IuInterval::from_u(t.u);
    bool self = comps.comp_of_arc.at(c.arc[0]) == comps.comp_of_arc.at(c.arc[c.over_in]);
    IuInterval gap = self ? abs_diff(uv, base) : uv;
    t.contribution = t.sign > 0 ? gap : -gap;
    v.total = v.total + t.contribution;
    v.terms.push_back(std::move(t));
  }
  return v;
}

IuValue iu_split(const Diagram& d, const SplitPartition& split, const UOracle& oracle) {
  ComponentLabeling comps = components(d);
  if (split.j.empty() || split.k.empty())
    throw DiagramError("iu split: both groups must be nonempty");
  for (int label : split.j)
    if (split.k.count(label) || label < 0 || label >= comps.count)
      throw DiagramError("iu split: bad component group");
  for (int label : split.k)
    if (label < 0 || label >= comps.count)
      throw DiagramError("iu split: bad component group");
  IuValue v;
  v.total = IuInterval::exact2(0);
  for (const auto& [id, c] : d.crossings) {
    int cu = comps.comp_of_arc.at(c.arc[0]);
    int co = comps.comp_of_arc.at(c.arc[c.over_in]);
    bool between = (split.j.count(cu) && split.k.count(co)) ||
                   (split.j.count(co) && split.k.count(cu));
    if (!between) continue;
    IuTerm t;
    t.crossing = id;
    t.sign = sign_of(c);
    t.u = oracle_at(oracle, smooth(d, id), id);
    IuInterval uv = IuInterval::from_u(t.u);
    t.contribution = t.sign > 0 ? uv : -uv;
    v.total = v.total + t.contribution;
    v.terms.push_back(std::move(t));
  }
  return v;
}

MoveBound move_lower_bound(const IuValue& a, const IuValue& b, BoundMode mode) {
  IuInterval gap = abs_diff(a.total, b.total);
  MoveBound r;
  r.mode = mode;
  r.lo4 = *gap.lo2;  // halves of the gap are quarters after dividing by 2
  if (gap.hi2) r.hi4 = *gap.hi2;
  return r;
}

long long iu_generic(const Diagram& d,
                     const std::function<long long(const Diagram&)>& phi) {
  long long base = phi(d);
  long long total = 0;
  for (const auto& [id, c] : d.crossings) {
    long long delta = phi(smooth(d, id)) - base;
    total += sign_of(c) * (delta < 0 ? -delta : delta);
  }
  return total;
}

}  // namespace knots
