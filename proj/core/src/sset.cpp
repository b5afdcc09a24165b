#include "factperm/sset.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "factperm/fincat.hpp"

namespace factperm::sset {

bool TruncatedSSet::is_degenerate(int k, int x) const {
  if (k == 0) return false;
  for (int i = 0; i < k; ++i)
    for (int y = 0; y < count[k - 1]; ++y)
      if (degen[k - 1][i][y] == x) return true;
  return false;
}

static std::vector<std::vector<char>> degenerate_mask(const TruncatedSSet& x) {
  std::vector<std::vector<char>> mask(x.dim + 1);
  for (int k = 0; k <= x.dim; ++k) mask[k].assign(x.count[k], 0);
  for (int k = 1; k <= x.dim; ++k)
    for (int i = 0; i < k; ++i)
      for (int y = 0; y < x.count[k - 1]; ++y) mask[k][x.degen[k - 1][i][y]] = 1;
  return mask;
}

Report check_simplicial_identities(const TruncatedSSet& x) {
  Report rep;
  rep.check = "sset/simplicial-identities";
  auto bad = [&](const std::string& law, int k, int s) {
    rep.fail(law + " fails at dim " + std::to_string(k) + " simplex " + std::to_string(s));
  };
  // d_i d_j = d_{j-1} d_i for i < j
  for (int k = 2; k <= x.dim; ++k)
    for (int j = 1; j <= k; ++j)
      for (int i = 0; i < j; ++i)
        for (int s = 0; s < x.count[k]; ++s)
          if (x.d(k - 1, i, x.d(k, j, s)) != x.d(k - 1, j - 1, x.d(k, i, s)))
            bad("d_i d_j", k, s);
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int k = 0; k + 2 <= x.dim; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= j; ++i)
        for (int s = 0; s < x.count[k]; ++s)
          if (x.s(k + 1, i, x.s(k, j, s)) != x.s(k + 1, j + 1, x.s(k, i, s)))
            bad("s_i s_j", k, s);
  // d_i s_j relations
  for (int k = 0; k + 1 <= x.dim; ++k)
    for (int j = 0; j <= k; ++j)
      for (int s = 0; s < x.count[k]; ++s) {
        for (int i = 0; i <= k + 1; ++i) {
          int v = x.d(k + 1, i, x.s(k, j, s));
          if (i == j || i == j + 1) {
            if (v != s) bad("d_j s_j = id", k, s);
          } else if (i < j) {
            if (k >= 1 && v != x.s(k - 1, j - 1, x.d(k, i, s))) bad("d_i s_j (i<j)", k, s);
          } else {  // i > j + 1
            if (k >= 1 && v != x.s(k - 1, j, x.d(k, i - 1, s))) bad("d_i s_j (i>j+1)", k, s);
          }
        }
      }
  return rep;
}

NerveData nerve_data(const fincat::FinCategory& c, int dim) {
  NerveData nd;
  nd.x.dim = dim;
  nd.x.count.assign(dim + 1, 0);
  nd.x.face.resize(dim + 1);
  nd.x.degen.resize(dim + 1);
  nd.x.label.resize(dim + 1);
  nd.flat.resize(dim + 1);

  nd.x.count[0] = c.objects();

  // chains are enumerated lexicographically on the morphism tuple, so ids can
  // be computed arithmetically: the id of (f, rest) is the block offset of f
  // plus the rank of rest among chains sharing its start object.
  std::vector<std::vector<int>> rank_by_start(dim + 1);  // per dim, per chain id
  std::vector<std::vector<int>> start_count(dim + 1);    // per dim, per object
  std::vector<std::vector<int>> block_offset(dim + 1);   // per dim >= 1, per morphism

  start_count[0].assign(c.objects(), 1);
  rank_by_start[0].assign(c.objects(), 0);

  for (int k = 1; k <= dim; ++k) {
    block_offset[k].assign(c.morphisms() + 1, 0);
    for (int f = 0; f < c.morphisms(); ++f)
      block_offset[k][f + 1] =
          block_offset[k][f] + (k == 1 ? 1 : start_count[k - 1][c.cod(f)]);
    const int total = block_offset[k][c.morphisms()];
    nd.x.count[k] = total;
    nd.flat[k].resize(static_cast<size_t>(total) * k);
    start_count[k].assign(c.objects(), 0);
    rank_by_start[k].resize(total);

    if (k == 1) {
      for (int f = 0; f < c.morphisms(); ++f) nd.flat[1][f] = f;
    } else {
      // per start object, the ordered list of previous-dim chain ids
      std::vector<std::vector<int>> by_start(c.objects());
      for (int id = 0; id < nd.x.count[k - 1]; ++id)
        by_start[c.dom(nd.flat[k - 1][static_cast<size_t>(id) * (k - 1)])].push_back(id);
      int at = 0;
      for (int f = 0; f < c.morphisms(); ++f)
        for (int rest : by_start[c.cod(f)]) {
          int* dst = nd.flat[k].data() + static_cast<size_t>(at) * k;
          dst[0] = f;
          const int* src = nd.flat[k - 1].data() + static_cast<size_t>(rest) * (k - 1);
          std::copy(src, src + (k - 1), dst + 1);
          ++at;
        }
    }
    for (int id = 0; id < total; ++id) {
      int st = c.dom(nd.flat[k][static_cast<size_t>(id) * k]);
      rank_by_start[k][id] = start_count[k][st]++;
    }
  }

  // id of an explicit chain: fold block offsets over suffix ranks
  auto chain_id_full = [&](int k, const int* ch) {
    if (k == 0) return 0;
    int id = ch[k - 1];  // the length-1 suffix is the morphism id itself
    for (int j = k - 2; j >= 0; --j) {
      int suffix_dim = k - 1 - j;
      id = block_offset[suffix_dim + 1][ch[j]] + rank_by_start[suffix_dim][id];
    }
    return id;
  };

  for (int k = 1; k <= dim; ++k) {
    nd.x.face[k].assign(k + 1, std::vector<int>(nd.x.count[k], -1));
    std::vector<int> fc(k);
    for (int s = 0; s < nd.x.count[k]; ++s) {
      const int* ch = nd.flat[k].data() + static_cast<size_t>(s) * k;
      for (int i = 0; i <= k; ++i) {
        if (k == 1) {
          nd.x.face[k][i][s] = (i == 0) ? c.cod(ch[0]) : c.dom(ch[0]);
          continue;
        }
        int len = 0;
        if (i == 0)
          for (int j = 1; j < k; ++j) fc[len++] = ch[j];
        else if (i == k)
          for (int j = 0; j + 1 < k; ++j) fc[len++] = ch[j];
        else {
          for (int j = 0; j < k; ++j)
            if (j != i) fc[len++] = ch[j];
          fc[i - 1] = c.compose(ch[i], ch[i - 1]);
        }
        nd.x.face[k][i][s] = chain_id_full(k - 1, fc.data());
      }
    }
  }

  for (int k = 0; k < dim; ++k) {
    nd.x.degen[k].assign(k + 1, std::vector<int>(nd.x.count[k], -1));
    std::vector<int> dc(k + 1);
    for (int s = 0; s < nd.x.count[k]; ++s) {
      const int* ch = k == 0 ? nullptr : nd.flat[k].data() + static_cast<size_t>(s) * k;
      int start = k == 0 ? s : c.dom(ch[0]);
      for (int i = 0; i <= k; ++i) {
        int vertex = i == 0 ? start : c.cod(ch[i - 1]);
        for (int j = 0; j < i; ++j) dc[j] = ch[j];
        dc[i] = c.identity(vertex);
        for (int j = i; j < k; ++j) dc[j + 1] = ch[j];
        nd.x.degen[k][i][s] = chain_id_full(k + 1, dc.data());
      }
    }
  }
  return nd;
}

TruncatedSSet nerve_truncate(const fincat::FinCategory& c, int dim) {
  return nerve_data(c, dim).x;
}

// ---------------------------------------------------------------------------
// Smith normal form over Z, row-major dense matrix, long long entries.

std::vector<long long> smith_normal_form(std::vector<long long> m, int rows, int cols) {
  auto at = [&](int i, int j) -> long long& { return m[static_cast<size_t>(i) * cols + j]; };
  int t = 0;
  const int bound = std::min(rows, cols);
  std::vector<long long> diag;
  while (t < bound) {
    // find a nonzero pivot of minimal absolute value
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (at(i, j) != 0 && (pi < 0 || std::llabs(at(i, j)) < best)) {
          pi = i;
          pj = j;
          best = std::llabs(at(i, j));
        }
    if (pi < 0) break;
    for (int j = 0; j < cols; ++j) std::swap(at(t, j), at(pi, j));
    for (int i = 0; i < rows; ++i) std::swap(at(i, t), at(i, pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (at(i, t) == 0) continue;
        long long q = at(i, t) / at(t, t);
        for (int j = 0; j < cols; ++j) at(i, j) -= q * at(t, j);
        if (at(i, t) != 0) {  // remainder smaller than pivot: swap rows and redo
          for (int j = 0; j < cols; ++j) std::swap(at(t, j), at(i, j));
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (at(t, j) == 0) continue;
        long long q = at(t, j) / at(t, t);
        for (int i = 0; i < rows; ++i) at(i, j) -= q * at(i, t);
        if (at(t, j) != 0) {
          for (int i = 0; i < rows; ++i) std::swap(at(i, t), at(i, j));
          clean = false;
        }
      }
      if (clean) {
        // enforce divisibility of the remaining block by the pivot
        for (int i = t + 1; i < rows && clean; ++i)
          for (int j = t + 1; j < cols && clean; ++j)
            if (at(i, j) % at(t, t) != 0) {
              for (int jj = 0; jj < cols; ++jj) at(t, jj) += at(i, jj);
              clean = false;
            }
      }
    }
    diag.push_back(std::llabs(at(t, t)));
    ++t;
  }
  return diag;
}

std::tuple<int, int, std::vector<long long>> homology(const TruncatedSSet& x) {
  if (x.dim < 2) throw std::invalid_argument("homology needs a 2-truncation or deeper");
  // pi0 by union-find over vertices
  std::vector<int> parent(x.count[0]);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int e = 0; e < x.count[1]; ++e) {
    int a = find(x.d(1, 0, e)), b = find(x.d(1, 1, e));
    if (a != b) parent[a] = b;
  }
  int pi0 = 0;
  for (int v = 0; v < x.count[0]; ++v)
    if (find(v) == v) ++pi0;

  auto mask = degenerate_mask(x);
  std::vector<int> edge_row(x.count[1], -1);
  int nedges = 0;
  for (int e = 0; e < x.count[1]; ++e)
    if (!mask[1][e]) edge_row[e] = nedges++;
  std::vector<int> tris;
  for (int tt = 0; tt < x.count[2]; ++tt)
    if (!mask[2][tt]) tris.push_back(tt);

  // boundary_1 : edges -> vertices
  std::vector<long long> d1(static_cast<size_t>(x.count[0]) * nedges, 0);
  for (int e = 0; e < x.count[1]; ++e) {
    if (edge_row[e] < 0) continue;
    d1[static_cast<size_t>(x.d(1, 0, e)) * nedges + edge_row[e]] += 1;
    d1[static_cast<size_t>(x.d(1, 1, e)) * nedges + edge_row[e]] -= 1;
  }
  // boundary_2 : triangles -> edges (normalized: degenerate faces vanish)
  std::vector<long long> d2(static_cast<size_t>(nedges) * tris.size(), 0);
  for (size_t col = 0; col < tris.size(); ++col) {
    int tri = tris[col];
    const int sign[3] = {1, -1, 1};
    for (int i = 0; i <= 2; ++i) {
      int e = x.d(2, i, tri);
      if (edge_row[e] >= 0)
        d2[static_cast<size_t>(edge_row[e]) * tris.size() + col] += sign[i];
    }
  }

  auto diag1 = smith_normal_form(d1, x.count[0], nedges);
  int rank1 = 0;
  for (long long v : diag1)
    if (v != 0) ++rank1;
  auto diag2 = smith_normal_form(d2, nedges, static_cast<int>(tris.size()));
  int rank2 = 0;
  std::vector<long long> torsion;
  for (long long v : diag2)
    if (v != 0) {
      ++rank2;
      if (v > 1) torsion.push_back(v);
    }
  std::sort(torsion.begin(), torsion.end());
  int h1_rank = (nedges - rank1) - rank2;
  return {pi0, h1_rank, torsion};
}

// ---------------------------------------------------------------------------

int apply_monotone(const TruncatedSSet& x, const std::vector<int>& m, int l, int simplex) {
  const int k = static_cast<int>(m.size()) - 1;
  // degeneracy step
  for (int i = 0; i < k; ++i)
    if (m[i] == m[i + 1]) {
      std::vector<int> rest(m);
      rest.erase(rest.begin() + i + 1);
      return x.s(k - 1, i, apply_monotone(x, rest, l, simplex));
    }
  // injective: peel missing indices as faces
  if (k == l) return simplex;  // injective monotone [k] -> [k] is the identity
  int j = 0;
  {
    std::vector<char> hit(l + 1, 0);
    for (int v : m) hit[v] = 1;
    while (hit[j]) ++j;
  }
  std::vector<int> rest(m);
  for (int& v : rest)
    if (v > j) --v;
  return apply_monotone(x, rest, l - 1, x.d(l, j, simplex));
}

int SimplexCategory::object_of(int k, int simplex) const {
  for (size_t i = 0; i < obj.size(); ++i)
    if (obj[i].first == k && obj[i].second == simplex) return static_cast<int>(i);
  return -1;
}

static void enumerate_monotone(int k, int l, std::vector<int>& cur,
                               std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k + 1) {
    out.push_back(cur);
    return;
  }
  int lo = cur.empty() ? 0 : cur.back();
  for (int v = lo; v <= l; ++v) {
    cur.push_back(v);
    enumerate_monotone(k, l, cur, out);
    cur.pop_back();
  }
}

SimplexCategory category_of_simplices(const TruncatedSSet& x, int dim) {
  SimplexCategory sc;
  for (int k = 0; k <= dim; ++k)
    for (int s = 0; s < x.count[k]; ++s) sc.obj.emplace_back(k, s);

  fincat::RawCategory raw;
  for (auto [k, s] : sc.obj)
    raw.objects.push_back("d" + std::to_string(k) + "#" + std::to_string(s));

  struct SMor { int dom, cod; std::vector<int> map; };
  std::vector<SMor> mors;
  for (size_t a = 0; a < sc.obj.size(); ++a)
    for (size_t b = 0; b < sc.obj.size(); ++b) {
      auto [k, s] = sc.obj[a];
      auto [l, t] = sc.obj[b];
      std::vector<std::vector<int>> maps;
      std::vector<int> cur;
      enumerate_monotone(k, l, cur, maps);
      for (auto& m : maps)
        if (apply_monotone(x, m, l, t) == s) {
          mors.push_back({static_cast<int>(a), static_cast<int>(b), m});
          sc.mor_map.push_back(m);
          std::string nm;
          for (int v : m) nm += (nm.empty() ? "" : ".") + std::to_string(v);
          raw.morphisms.push_back({"[" + nm + "]", static_cast<int>(a), static_cast<int>(b)});
        }
    }

  auto mor_index = [&](int dom, int cod, const std::vector<int>& m) {
    for (size_t i = 0; i < mors.size(); ++i)
      if (mors[i].dom == dom && mors[i].cod == cod && mors[i].map == m)
        return static_cast<int>(i);
    return -1;
  };

  raw.identities.resize(sc.obj.size());
  for (size_t a = 0; a < sc.obj.size(); ++a) {
    std::vector<int> idm(sc.obj[a].first + 1);
    std::iota(idm.begin(), idm.end(), 0);
    raw.identities[a] = mor_index(static_cast<int>(a), static_cast<int>(a), idm);
  }
  for (size_t i = 0; i < mors.size(); ++i)
    for (size_t j = 0; j < mors.size(); ++j) {
      if (mors[j].cod != mors[i].dom) continue;  // i after j
      std::vector<int> comp(mors[j].map.size());
      for (size_t v = 0; v < comp.size(); ++v) comp[v] = mors[i].map[mors[j].map[v]];
      int k = mor_index(mors[j].dom, mors[i].cod, comp);
      if (k >= 0)
        raw.compose.push_back({static_cast<int>(i), static_cast<int>(j), k});
    }
  sc.cat = fincat::make_cat(raw);
  return sc;
}

int epsilon_eval(const TruncatedSSet& x, const SimplexCategory& sc, int start_obj,
                 std::span<const int> chain) {
  const int m = static_cast<int>(chain.size());
  // walk the chain, recording where the last vertex of each stage lands
  std::vector<int> objs{start_obj};
  for (int a : chain) objs.push_back(sc.cat->cod(a));
  std::vector<int> f(m + 1);
  for (int i = 0; i <= m; ++i) {
    int v = sc.obj[objs[i]].first;  // last vertex of the i-th simplex
    for (int j = i + 1; j <= m; ++j) v = sc.mor_map[chain[j - 1]][v];
    f[i] = v;
  }
  auto [l, t] = sc.obj[objs[m]];
  return apply_monotone(x, f, l, t);
}

Report check_epsilon(const TruncatedSSet& x, const SimplexCategory& sc, int dim) {
  Report rep;
  rep.check = "sset/epsilon-simplicial";
  rep.bounds = "dim<=" + std::to_string(dim);
  NerveData n = nerve_data(*sc.cat, dim);

  std::vector<std::vector<int>> value(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    value[k].resize(n.x.count[k]);
    for (int s = 0; s < n.x.count[k]; ++s) {
      std::span<const int> ch = n.chain_at(k, s);
      int start = k == 0 ? s : sc.cat->dom(ch[0]);
      value[k][s] = epsilon_eval(x, sc, start, ch);
    }
  }

  for (int k = 1; k <= dim; ++k)
    for (int s = 0; s < n.x.count[k]; ++s) {
      int es = value[k][s];
      for (int i = 0; i <= k; ++i)
        if (value[k - 1][n.x.d(k, i, s)] != x.d(k, i, es))
          rep.fail("face " + std::to_string(i) + " not preserved at dim " +
                   std::to_string(k) + " chain " + std::to_string(s));
    }
  for (int k = 0; k < dim; ++k)
    for (int s = 0; s < n.x.count[k]; ++s) {
      int es = value[k][s];
      for (int i = 0; i <= k; ++i)
        if (value[k + 1][n.x.s(k, i, s)] != x.s(k, i, es))
          rep.fail("degeneracy " + std::to_string(i) + " not preserved at dim " +
                   std::to_string(k) + " chain " + std::to_string(s));
    }
  return rep;
}

Report check_marked(const MarkedSSet& m) {
  Report rep;
  rep.check = "sset/marked";
  std::vector<char> mask(m.underlying.count[1], 0);
  for (int e : m.marked) mask[e] = 1;
  for (int v = 0; v < m.underlying.count[0]; ++v)
    if (!mask[m.underlying.s(0, 0, v)])
      rep.fail("degenerate edge of vertex " + std::to_string(v) + " is unmarked");
  return rep;
}

MarkedSSet marked_nerve(const TruncatedSSet& x, const SimplexCategory& sc,
                        const std::vector<int>& edge_set, int dim) {
  MarkedSSet m;
  m.underlying = nerve_truncate(*sc.cat, dim);
  m.marked = marking(x, sc, edge_set);
  return m;
}

std::vector<int> marking(const TruncatedSSet& x, const SimplexCategory& sc,
                         const std::vector<int>& edge_set) {
  std::vector<int> out;
  std::vector<char> in_s(x.count[1], 0);
  for (int e : edge_set) in_s[e] = 1;
  for (int a = 0; a < sc.cat->morphisms(); ++a) {
    int start = sc.cat->dom(a);
    const int one[1] = {a};
    int img = epsilon_eval(x, sc, start, std::span<const int>(one, 1));
    bool marked = x.is_degenerate(1, img);
    if (!marked) {
      auto [k, s] = sc.obj[sc.cat->cod(a)];
      if (k == 1 && sc.obj[start].first == 0 && sc.mor_map[a] == std::vector<int>{0} &&
          in_s[s])
        marked = true;
    }
    if (marked) out.push_back(a);
  }
  return out;
}

}  // namespace factperm::sset
