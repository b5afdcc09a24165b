#include "factperm/finstar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace factperm::finstar {

PointedMap identity_map(int n) {
  PointedMap f;
  f.n = f.m = n;
  f.img.resize(n);
  for (int i = 1; i <= n; ++i) f.img[i - 1] = i;
  return f;
}

PointedMap compose(const PointedMap& g, const PointedMap& f) {
  PointedMap h;
  h.n = f.n;
  h.m = g.m;
  h.img.resize(f.n);
  for (int i = 1; i <= f.n; ++i) h.img[i - 1] = g(f(i));
  return h;
}

std::string to_text(const PointedMap& f) {
  std::ostringstream os;
  os << f.n << " " << f.m << " :";
  for (int v : f.img) os << " " << v;
  return os.str();
}

PointedMap parse_pointed_map(const std::string& text) {
  std::istringstream is(text);
  PointedMap f;
  std::string colon;
  if (!(is >> f.n >> f.m >> colon) || colon != ":")
    throw std::runtime_error("pointed map: expected \"n m : a1 ... an\"");
  f.img.resize(f.n);
  for (int i = 0; i < f.n; ++i)
    if (!(is >> f.img[i]) || f.img[i] < 0 || f.img[i] > f.m)
      throw std::runtime_error("pointed map: bad entry");
  return f;
}

Classification classify(const PointedMap& f) {
  Classification c;
  std::vector<int> preimage_count(f.m + 1, 0);
  std::vector<int> preimage(f.m + 1, 0);
  for (int i = 1; i <= f.n; ++i)
    if (f(i) != 0) {
      ++preimage_count[f(i)];
      preimage[f(i)] = i;
    }
  c.inert = true;
  for (int j = 1; j <= f.m; ++j)
    if (preimage_count[j] != 1) c.inert = false;
  c.strongly_inert = c.inert;
  if (c.inert)
    for (int j = 1; j < f.m; ++j)
      if (preimage[j] > preimage[j + 1]) c.strongly_inert = false;
  c.active = true;
  for (int i = 1; i <= f.n; ++i)
    if (f(i) == 0) c.active = false;
  return c;
}

bool is_active(const PointedMap& f) { return classify(f).active; }

std::pair<PointedMap, PointedMap> factorize(const PointedMap& f) {
  Subset support = 0;
  for (int i = 1; i <= f.n; ++i)
    if (f(i) != 0) support |= 1u << (i - 1);
  PointedMap inert = rho(f.n, support);
  PointedMap act;
  act.n = subset_size(support);
  act.m = f.m;
  for (int i : subset_elements(support)) act.img.push_back(f(i));
  return {inert, act};
}

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (int i = 0; s >> i; ++i)
    if (s & (1u << i)) out.push_back(i + 1);
  return out;
}

int subset_size(Subset s) { return __builtin_popcount(s); }

std::string subset_name(Subset s) {
  std::string out;
  for (int e : subset_elements(s)) out += (out.empty() ? "" : ",") + std::to_string(e);
  return out;
}

PointedMap rho(int n, Subset s) {
  PointedMap f;
  f.n = n;
  f.m = subset_size(s);
  f.img.assign(n, 0);
  int rank = 0;
  for (int i = 1; i <= n; ++i)
    if (s & (1u << (i - 1))) f.img[i - 1] = ++rank;
  return f;
}

PointedMap active_restriction(const PointedMap& f, Subset s) {
  // elements of f^{-1}(S), in order, mapped to the rank of their image in S
  std::vector<int> rank(f.m + 1, 0);
  int r = 0;
  for (int j = 1; j <= f.m; ++j)
    if (s & (1u << (j - 1))) rank[j] = ++r;
  PointedMap out;
  out.m = r;
  for (int i = 1; i <= f.n; ++i)
    if (f(i) != 0 && (s & (1u << (f(i) - 1)))) out.img.push_back(rank[f(i)]);
  out.n = static_cast<int>(out.img.size());
  return out;
}

PointedMap fold(int n) {
  PointedMap f;
  f.n = n;
  f.m = 1;
  f.img.assign(n, 1);
  return f;
}

PointedMap wedge(const PointedMap& f, const PointedMap& g) {
  PointedMap w;
  w.n = f.n + g.n;
  w.m = f.m + g.m;
  w.img.resize(w.n);
  for (int i = 1; i <= f.n; ++i) w.img[i - 1] = f(i);
  for (int i = 1; i <= g.n; ++i) w.img[f.n + i - 1] = g(i) == 0 ? 0 : f.m + g(i);
  return w;
}

PointedMap swap_blocks(int n, int m) {
  PointedMap s;
  s.n = n + m;
  s.m = m + n;
  s.img.resize(n + m);
  for (int i = 1; i <= n; ++i) s.img[i - 1] = m + i;
  for (int i = 1; i <= m; ++i) s.img[n + i - 1] = i;
  return s;
}

std::vector<PointedMap> all_maps(int n, int m) {
  std::vector<PointedMap> out;
  PointedMap f;
  f.n = n;
  f.m = m;
  f.img.assign(n, 0);
  while (true) {
    out.push_back(f);
    int i = n - 1;
    while (i >= 0 && f.img[i] == m) f.img[i--] = 0;
    if (i < 0) break;
    ++f.img[i];
  }
  return out;
}

std::vector<PointedMap> all_active(int n, int m) {
  std::vector<PointedMap> out;
  for (auto& f : all_maps(n, m))
    if (is_active(f)) out.push_back(f);
  return out;
}

std::vector<PointedMap> all_strongly_inert(int n, int m) {
  std::vector<PointedMap> out;
  for (auto& f : all_maps(n, m))
    if (classify(f).strongly_inert) out.push_back(f);
  return out;
}

// ---------------------------------------------------------------------------

NablaMap identity_nabla(int n) {
  NablaMap f;
  f.n = f.m = n;
  f.img.resize(n + 2);
  for (int x = -1; x <= n; ++x) f.img[x + 1] = x;
  return f;
}

NablaMap compose(const NablaMap& g, const NablaMap& f) {
  NablaMap h;
  h.n = f.n;
  h.m = g.m;
  h.img.resize(f.n + 2);
  for (int x = -1; x <= f.n; ++x) h.img[x + 1] = g(f(x));
  return h;
}

Report check_nabla(const NablaMap& f) {
  Report rep;
  rep.check = "finstar/nabla";
  if (f(-1) != -1 || f(f.n) != f.m) rep.fail("extrema not preserved");
  for (int x = -1; x < f.n; ++x)
    if (f(x) > f(x + 1)) rep.fail("not monotone at " + std::to_string(x));
  return rep;
}

std::vector<MonotoneMap> all_monotone(int n, int m) {
  std::vector<MonotoneMap> out;
  MonotoneMap u;
  u.n = n;
  u.m = m;
  u.img.assign(n + 1, 0);
  while (true) {
    bool mono = true;
    for (int i = 0; i < n; ++i)
      if (u.img[i] > u.img[i + 1]) mono = false;
    if (mono) out.push_back(u);
    int i = n;
    while (i >= 0 && u.img[i] == m) u.img[i--] = 0;
    if (i < 0) break;
    ++u.img[i];
  }
  return out;
}

std::vector<NablaMap> all_nabla(int n, int m) {
  std::vector<NablaMap> out;
  NablaMap f;
  f.n = n;
  f.m = m;
  f.img.assign(n + 2, -1);
  while (true) {
    bool ok = f.img[0] == -1 && f.img[n + 1] == m;
    for (int i = 0; ok && i <= n; ++i)
      if (f.img[i] > f.img[i + 1]) ok = false;
    if (ok) out.push_back(f);
    int i = n + 1;
    while (i >= 0 && f.img[i] == m) f.img[i--] = -1;
    if (i < 0) break;
    ++f.img[i];
  }
  return out;
}

NablaMap delta_to_nabla(const MonotoneMap& u) {
  NablaMap f;
  f.n = u.m;
  f.m = u.n;
  f.img.resize(u.m + 2);
  for (int x = -1; x <= u.m; ++x) {
    // largest i with u(i) <= x, or -1
    int best = -1;
    for (int i = 0; i <= u.n; ++i)
      if (u.img[i] <= x) best = i;
    f.img[x + 1] = best;
  }
  return f;
}

bool nabla_inert(const NablaMap& f) {
  for (int y = 0; y < f.m; ++y) {  // non-extrema of the target
    int count = 0;
    for (int x = -1; x <= f.n; ++x)
      if (f(x) == y) ++count;
    if (count != 1) return false;
  }
  return true;
}

bool nabla_active(const NablaMap& f) {
  int lo = 0, hi = 0;
  for (int x = -1; x <= f.n; ++x) {
    if (f(x) == -1) ++lo;
    if (f(x) == f.m) ++hi;
  }
  return lo == 1 && hi == 1;
}

bool is_subinterval_inclusion(const MonotoneMap& u) {
  for (int i = 0; i < u.n; ++i)
    if (u.img[i + 1] != u.img[i] + 1) return false;
  return true;
}

bool preserves_endpoints(const MonotoneMap& u) {
  return u.img[0] == 0 && u.img[u.n] == u.m;
}

// ---------------------------------------------------------------------------

int ActiveCategory::mor_id(const PointedMap& f) const {
  for (size_t i = 0; i < mor_of.size(); ++i)
    if (mor_of[i] == f) return static_cast<int>(i);
  return -1;
}

ActiveCategory active_category(int bound) {
  ActiveCategory a;
  a.bound = bound;
  fincat::RawCategory raw;
  for (int n = 0; n <= bound; ++n) raw.objects.push_back("<" + std::to_string(n) + ">");
  for (int n = 0; n <= bound; ++n)
    for (int m = 0; m <= bound; ++m)
      for (auto& f : all_active(n, m)) {
        a.mor_of.push_back(f);
        raw.morphisms.push_back({to_text(f), n, m});
      }
  raw.identities.resize(bound + 1);
  for (int n = 0; n <= bound; ++n) raw.identities[n] = a.mor_id(identity_map(n));
  for (size_t g = 0; g < a.mor_of.size(); ++g)
    for (size_t f = 0; f < a.mor_of.size(); ++f) {
      if (a.mor_of[f].m != a.mor_of[g].n) continue;
      int c = a.mor_id(compose(a.mor_of[g], a.mor_of[f]));
      raw.compose.push_back({static_cast<int>(g), static_cast<int>(f), c});
    }
  a.cat = fincat::make_cat(raw);
  return a;
}

TwActive enumerate_tw_active(int bound) {
  TwActive t;
  t.bound = bound;
  t.active = active_category(bound);
  t.tw = fincat::twisted_arrow(t.active.cat);
  return t;
}

const std::vector<PointedMap>& TwActive::object_map() const { return active.mor_of; }

int TwActive::object_id(const PointedMap& f) const { return active.mor_id(f); }

std::pair<PointedMap, PointedMap> TwActive::mor_maps(int tw_mor) const {
  auto [u, v] = tw.mor_pair[tw_mor];
  return {active.mor_of[u], active.mor_of[v]};
}

int TwActive::mor_id(const PointedMap& u, const PointedMap& v, int dom, int cod) const {
  int ui = active.mor_id(u), vi = active.mor_id(v);
  for (int i = 0; i < tw.cat->morphisms(); ++i)
    if (tw.cat->dom(i) == dom && tw.cat->cod(i) == cod && tw.mor_pair[i].first == ui &&
        tw.mor_pair[i].second == vi)
      return i;
  return -1;
}

std::vector<std::pair<PointedMap, PointedMap>> tw_hom(const PointedMap& from,
                                                      const PointedMap& to) {
  std::vector<std::pair<PointedMap, PointedMap>> out;
  for (auto& u : all_active(from.n, to.n))
    for (auto& v : all_active(to.m, from.m))
      if (compose(v, compose(to, u)) == from) out.emplace_back(u, v);
  return out;
}

}  // namespace factperm::finstar
