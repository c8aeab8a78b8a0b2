#include "wallcx/simplicial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace wallcx {

std::size_t SimplicialComplex::total_faces() const {
  std::size_t n = 0;
  for (const auto& layer : faces_by_dim) n += layer.size();
  return n;
}

bool SimplicialComplex::has_face(const std::vector<std::size_t>& face) const {
  if (face.empty()) return false;
  const std::size_t d = face.size() - 1;
  return d < faces_by_dim.size() && faces_by_dim[d].count(face) > 0;
}

void SimplicialComplex::insert_face_with_subsets(const std::vector<std::size_t>& face) {
  if (face.empty()) throw std::invalid_argument("insert_face: empty face");
  if (faces_by_dim.size() < face.size()) faces_by_dim.resize(face.size());
  /* All nonempty subsets via bitmask; faces are tiny. */
  const std::size_t n = face.size();
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    std::vector<std::size_t> sub;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) sub.push_back(face[i]);
    faces_by_dim[sub.size() - 1].insert(std::move(sub));
  }
}

void SimplicialComplex::validate() const {
  std::set<std::string> seen;
  for (const auto& l : vertex_labels)
    if (!seen.insert(l).second)
      throw std::invalid_argument("complex: duplicate vertex label " + l);
  if (!faces_by_dim.empty() && faces_by_dim.back().empty())
    throw std::invalid_argument("complex: trailing empty dimension layer");
  if (faces_by_dim.empty()) {
    if (!vertex_labels.empty())
      throw std::invalid_argument("complex: vertices without 0-faces");
    return;
  }
  if (faces_by_dim[0].size() != vertex_labels.size())
    throw std::invalid_argument("complex: 0-faces must cover the vertices exactly");
  for (std::size_t d = 0; d < faces_by_dim.size(); ++d) {
    for (const auto& f : faces_by_dim[d]) {
      if (f.size() != d + 1) throw std::invalid_argument("complex: face in wrong layer");
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] >= vertex_labels.size())
          throw std::invalid_argument("complex: vertex id out of range");
        if (i > 0 && f[i - 1] >= f[i])
          throw std::invalid_argument("complex: face not strictly ascending");
      }
      if (d > 0) {
        for (std::size_t skip = 0; skip < f.size(); ++skip) {
          std::vector<std::size_t> facet;
          for (std::size_t i = 0; i < f.size(); ++i)
            if (i != skip) facet.push_back(f[i]);
          if (!faces_by_dim[d - 1].count(facet))
            throw std::invalid_argument("complex: missing facet, not downward closed");
        }
      }
    }
  }
}

SimplicialComplex complex_from_faces(std::vector<std::string> labels,
                                     const std::vector<std::vector<std::size_t>>& faces) {
  SimplicialComplex c;
  c.vertex_labels = std::move(labels);
  for (std::size_t v = 0; v < c.vertex_labels.size(); ++v)
    c.insert_face_with_subsets({v});
  for (auto f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    c.insert_face_with_subsets(f);
  }
  c.validate();
  return c;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  SimplicialComplex c;
  for (const auto& l : a.vertex_labels) c.vertex_labels.push_back("J0:" + l);
  for (const auto& l : b.vertex_labels) c.vertex_labels.push_back("J1:" + l);
  const std::size_t off = a.vertex_labels.size();

  auto push = [&](const std::vector<std::size_t>& face) {
    if (c.faces_by_dim.size() < face.size()) c.faces_by_dim.resize(face.size());
    c.faces_by_dim[face.size() - 1].insert(face);
  };

  std::vector<std::vector<std::size_t>> a_faces{{}}, b_faces{{}};
  for (const auto& layer : a.faces_by_dim)
    for (const auto& f : layer) a_faces.push_back(f);
  for (const auto& layer : b.faces_by_dim)
    for (const auto& f : layer) b_faces.push_back(f);

  for (const auto& fa : a_faces) {
    for (const auto& fb : b_faces) {
      if (fa.empty() && fb.empty()) continue;
      std::vector<std::size_t> face = fa;  // a-ids stay below the offset
      for (std::size_t v : fb) face.push_back(v + off);
      push(face);
    }
  }
  c.validate();
  return c;
}

SimplicialComplex two_points() {
  return complex_from_faces({"S+", "S-"}, {});
}

SimplicialComplex suspension(const SimplicialComplex& a) { return join(two_points(), a); }

long long euler_characteristic(const SimplicialComplex& c) {
  long long chi = 0;
  long long sign = 1;
  for (const auto& layer : c.faces_by_dim) {
    chi += sign * static_cast<long long>(layer.size());
    sign = -sign;
  }
  return chi;
}

SimplicialComplex vertex_link(const SimplicialComplex& c, std::size_t v) {
  if (v >= c.vertex_labels.size()) throw std::invalid_argument("vertex_link: no such vertex");
  /* Link vertices are the edge neighbours of v; downward closure of the
     link is automatic because c is downward closed. */
  std::vector<std::size_t> remap(c.vertex_labels.size(), SIZE_MAX);
  SimplicialComplex out;
  if (c.faces_by_dim.size() > 1) {
    for (const auto& e : c.faces_by_dim[1]) {
      if (e[0] == v || e[1] == v) {
        std::size_t u = e[0] == v ? e[1] : e[0];
        remap[u] = out.vertex_labels.size();
        out.vertex_labels.push_back(c.vertex_labels[u]);
      }
    }
  }
  for (const auto& layer : c.faces_by_dim) {
    for (const auto& f : layer) {
      if (std::find(f.begin(), f.end(), v) != f.end()) continue;
      std::vector<std::size_t> with_v = f;
      with_v.insert(std::lower_bound(with_v.begin(), with_v.end(), v), v);
      if (!c.has_face(with_v)) continue;
      std::vector<std::size_t> mapped;
      for (std::size_t u : f) mapped.push_back(remap[u]);
      std::sort(mapped.begin(), mapped.end());
      if (out.faces_by_dim.size() < mapped.size()) out.faces_by_dim.resize(mapped.size());
      out.faces_by_dim[mapped.size() - 1].insert(std::move(mapped));
    }
  }
  out.validate();
  return out;
}

SimplicialComplex sphere_boundary(std::size_t k) {
  if (k == 0) return SimplicialComplex{};
  std::vector<std::string> labels;
  for (std::size_t i = 0; i <= k; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::vector<std::size_t>> faces;
  for (std::size_t skip = 0; skip <= k; ++skip) {
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i <= k; ++i)
      if (i != skip) f.push_back(i);
    faces.push_back(f);
  }
  return complex_from_faces(labels, faces);
}

SimplicialComplex full_simplex(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i <= k; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::size_t> top;
  for (std::size_t i = 0; i <= k; ++i) top.push_back(i);
  return complex_from_faces(labels, {top});
}

SimplicialComplex projective_plane() {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= 6; ++i) labels.push_back("p" + std::to_string(i));
  /* Ten triangles; every edge lies in exactly two of them. */
  std::vector<std::vector<std::size_t>> tris = {
      {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
      {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
  return complex_from_faces(labels, tris);
}

}  // namespace wallcx
