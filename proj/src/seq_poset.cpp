#include "wallcx/seq_poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace wallcx {

namespace {

bool all_distinct(const Seq& s) {
  Seq copy = s;
  std::sort(copy.begin(), copy.end());
  return std::adjacent_find(copy.begin(), copy.end()) == copy.end();
}

}  // namespace

void SequencePoset::validate() const {
  std::set<std::string> seen;
  for (const auto& l : ground) {
    if (l.find('/') != std::string::npos)
      throw std::invalid_argument("poset: ground label contains '/': " + l);
    if (!seen.insert(l).second)
      throw std::invalid_argument("poset: duplicate ground label " + l);
  }
  for (const auto& s : elements) {
    if (s.empty()) throw std::invalid_argument("poset: empty sequence");
    for (std::size_t v : s)
      if (v >= ground.size()) throw std::invalid_argument("poset: element out of range");
    if (!all_distinct(s)) throw std::invalid_argument("poset: repeated entry in a sequence");
  }
}

std::string SequencePoset::label_of(const Seq& s) const {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += '/';
    out += ground.at(s[i]);
  }
  return out;
}

bool is_ordered_sublist(const Seq& a, const Seq& b) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < b.size() && i < a.size(); ++j)
    if (b[j] == a[i]) ++i;
  return i == a.size();
}

bool strictly_below(const Seq& a, const Seq& b) {
  return a.size() < b.size() && is_ordered_sublist(a, b);
}

bool closed_under_sublists(const SequencePoset& f) {
  for (const auto& s : f.elements) {
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
      Seq sub;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1) sub.push_back(s[i]);
      if (!f.contains(sub)) return false;
    }
  }
  return true;
}

bool closed_under_permutations(const SequencePoset& f) {
  for (const auto& s : f.elements) {
    Seq perm = s;
    std::sort(perm.begin(), perm.end());
    do {
      if (!f.contains(perm)) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

bool satisfies_chain_condition(const SequencePoset& f) {
  return closed_under_sublists(f) && closed_under_permutations(f);
}

SequencePoset closure(std::vector<std::string> ground, const std::vector<Seq>& generators) {
  SequencePoset out;
  out.ground = std::move(ground);
  for (const auto& g : generators) {
    const std::size_t n = g.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
      Seq sub;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1) sub.push_back(g[i]);
      std::sort(sub.begin(), sub.end());
      do {
        out.elements.insert(sub);
      } while (std::next_permutation(sub.begin(), sub.end()));
    }
  }
  out.validate();
  return out;
}

SequencePoset all_injective_sequences(std::vector<std::string> ground, std::size_t max_len) {
  SequencePoset out;
  out.ground = std::move(ground);
  const std::size_t n = out.ground.size();
  const std::size_t cap = (max_len == 0 || max_len > n) ? n : max_len;
  Seq full(n);
  for (std::size_t i = 0; i < n; ++i) full[i] = i;
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    Seq sub;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) sub.push_back(i);
    if (sub.size() > cap) continue;
    do {
      out.elements.insert(sub);
    } while (std::next_permutation(sub.begin(), sub.end()));
  }
  out.validate();
  return out;
}

SequencePoset below(const SequencePoset& f, const Seq& v) {
  if (!all_distinct(v)) throw std::invalid_argument("below: v has repeated entries");
  for (std::size_t x : v)
    if (x >= f.ground.size()) throw std::invalid_argument("below: v out of range");
  SequencePoset out;
  out.ground = f.ground;
  for (const auto& w : f.elements) {
    if (w.size() <= v.size()) continue;
    if (!std::equal(v.begin(), v.end(), w.end() - v.size())) continue;
    out.elements.insert(Seq(w.begin(), w.end() - v.size()));
  }
  out.validate();
  return out;
}

SequencePoset adjoin(const SequencePoset& f, std::size_t n) {
  SequencePoset out;
  out.ground = f.ground;
  std::vector<std::size_t> z_ids;
  for (std::size_t i = 1; i <= n; ++i) {
    std::string name = "z" + std::to_string(i);
    while (std::find(out.ground.begin(), out.ground.end(), name) != out.ground.end())
      name = "_" + name;
    z_ids.push_back(out.ground.size());
    out.ground.push_back(name);
  }
  /* Interleave (z1..zn) with each f element: choose the z positions. */
  for (const auto& w : f.elements) {
    const std::size_t total = w.size() + n;
    std::vector<bool> is_z(total, false);
    /* First combination: z's in the leading slots. */
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[i] = i;
    while (true) {
      Seq seq;
      std::fill(is_z.begin(), is_z.end(), false);
      for (std::size_t p : pos) is_z[p] = true;
      std::size_t zi = 0, wi = 0;
      for (std::size_t t = 0; t < total; ++t) seq.push_back(is_z[t] ? z_ids[zi++] : w[wi++]);
      out.elements.insert(std::move(seq));
      /* Next combination of positions in lexicographic order. */
      std::size_t k = n;
      while (k > 0 && pos[k - 1] == total - n + (k - 1)) --k;
      if (k == 0) break;
      ++pos[k - 1];
      for (std::size_t i = k; i < n; ++i) pos[i] = pos[i - 1] + 1;
    }
  }
  out.validate();
  return out;
}

SequencePoset label_product(const SequencePoset& f, const std::vector<std::string>& tags) {
  SequencePoset out;
  const std::size_t m = tags.size();
  if (m == 0) return out;  // no tags, no pairs: the empty poset
  for (const auto& x : f.ground)
    for (const auto& t : tags) out.ground.push_back(x + "|" + t);
  for (const auto& w : f.elements) {
    std::vector<std::size_t> choice(w.size(), 0);
    while (true) {
      Seq seq;
      for (std::size_t i = 0; i < w.size(); ++i) seq.push_back(w[i] * m + choice[i]);
      out.elements.insert(std::move(seq));
      std::size_t k = w.size();
      while (k > 0 && choice[k - 1] == m - 1) {
        choice[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
      ++choice[k - 1];
    }
  }
  out.validate();
  return out;
}

LinkSplit link_split(const SequencePoset& f, const Seq& v) {
  LinkSplit out;
  out.lower.ground = f.ground;
  out.upper.ground = f.ground;
  for (const auto& w : f.elements) {
    if (strictly_below(w, v)) out.lower.elements.insert(w);
    if (strictly_below(v, w)) out.upper.elements.insert(w);
  }
  return out;
}

SimplicialComplex order_complex(const SequencePoset& f) {
  f.validate();
  SimplicialComplex c;
  std::vector<Seq> verts(f.elements.begin(), f.elements.end());
  /* Length-major vertex order: a strict sublist is shorter, so chains come
     out as ascending id vectors, which is the face invariant. */
  std::stable_sort(verts.begin(), verts.end(),
                   [](const Seq& a, const Seq& b) { return a.size() < b.size(); });
  for (const auto& s : verts) c.vertex_labels.push_back(f.label_of(s));
  const std::size_t n = verts.size();
  if (n == 0) return c;
  c.faces_by_dim.resize(1);
  for (std::size_t i = 0; i < n; ++i) c.faces_by_dim[0].insert({i});

  /* Successor lists under the strict order; chains are directed paths
     because the relation is transitive. */
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && strictly_below(verts[i], verts[j])) succ[i].push_back(j);

  std::vector<std::size_t> chain;
  auto extend = [&](auto&& self, std::size_t last) -> void {
    for (std::size_t nxt : succ[last]) {
      chain.push_back(nxt);
      if (c.faces_by_dim.size() < chain.size()) c.faces_by_dim.resize(chain.size());
      c.faces_by_dim[chain.size() - 1].insert(chain);
      self(self, nxt);
      chain.pop_back();
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    chain = {i};
    extend(extend, i);
  }
  c.validate();
  return c;
}

}  // namespace wallcx
