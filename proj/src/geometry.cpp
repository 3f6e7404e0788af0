#include "hsk/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hsk {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::runtime_error(msg);
}

}  // namespace

EdgeFrame::EdgeFrame(const Vec3d& n_prime, const Vec3d& m_prime, const Vec3d& n_second,
                     const Vec3d& m_second, const Vec3d& p0, const Vec3d& p1)
    : n1_(n_prime), m1_(m_prime), n2_(n_second), m2_(m_second), p0_(p0), p1_(p1) {
  const double tol = kTol.frame;
  if ((p1 - p0).norm() == 0.0) throw std::invalid_argument("EdgeFrame: degenerate segment");
  const Vec3d t = (p1 - p0).normalized();
  for (const Vec3d* v : {&n1_, &m1_, &n2_, &m2_}) {
    if (std::abs(v->norm() - 1.0) > tol)
      throw std::invalid_argument("EdgeFrame: frame vector is not a unit vector");
    if (std::abs(v->dot(t)) > tol)
      throw std::invalid_argument("EdgeFrame: frame vector is not orthogonal to the edge");
  }
  if (std::abs(n1_.dot(m1_)) > tol || std::abs(n2_.dot(m2_)) > tol)
    throw std::invalid_argument("EdgeFrame: n and m of a pair must be orthogonal");
}

EdgeFrame coordinate_edge(int j, int k) { return coordinate_edge(Basisd::standard(), j, k); }

EdgeFrame coordinate_edge(const Basisd& basis, int j, int k) {
  if (j < 0 || k < 0 || j > 2 || k > 2 || j >= k)
    throw std::invalid_argument("coordinate_edge: need axes 0 <= j < k <= 2");
  const int l = 3 - j - k;
  return EdgeFrame(basis.axis(j), basis.axis(k), basis.axis(k), basis.axis(j), Vec3d::Zero(),
                   basis.axis(l));
}

// ---------------------------------------------------------------------------

class PolyhedralPartBuilderAccess {
 public:
  static PolyhedralPart build(const PartSpec& spec, std::string id);
};

PolyhedralPart PolyhedralPartBuilderAccess::build(const PartSpec& spec, std::string id) {
  PolyhedralPart part;
  part.id_ = std::move(id);
  part.vertices_ = spec.vertices;

  const auto n_vertices = static_cast<int>(spec.vertices.size());
  require(n_vertices >= 4, "part '" + part.id_ + "': needs at least four vertices");
  require(!spec.faces.empty(), "part '" + part.id_ + "': needs faces");

  double six_volume = 0.0;
  // Directed half-edges, keyed by the undirected vertex pair.
  struct HalfEdge {
    int face;
    int from;
    int to;
  };
  std::map<std::pair<int, int>, std::vector<HalfEdge>> half_edges;

  for (std::size_t fi = 0; fi < spec.faces.size(); ++fi) {
    const auto& loop = spec.faces[fi];
    const std::string where = "part '" + part.id_ + "', face " + std::to_string(fi);
    require(loop.size() >= 3, where + ": fewer than three vertices");
    std::set<int> seen;
    for (int v : loop) {
      require(v >= 0 && v < n_vertices, where + ": vertex index out of range");
      require(seen.insert(v).second, where + ": repeated vertex in loop");
    }

    OrientedFace face;
    face.loop_.reserve(loop.size());
    for (int v : loop) face.loop_.push_back(spec.vertices[static_cast<std::size_t>(v)]);

    // Newell normal; for a planar loop its magnitude is twice the area.
    Vec3d newell = Vec3d::Zero();
    Vec3d centroid = Vec3d::Zero();
    const std::size_t m = face.loop_.size();
    for (std::size_t a = 0; a < m; ++a) {
      newell += face.loop_[a].cross(face.loop_[(a + 1) % m]);
      centroid += face.loop_[a];
    }
    centroid /= static_cast<double>(m);
    const double two_area = newell.norm();
    require(two_area > 1e-14, where + ": degenerate face");
    face.normal_ = newell / two_area;
    face.area_ = 0.5 * two_area;

    for (const Vec3d& p : face.loop_)
      require(std::abs((p - centroid).dot(face.normal_)) <= kTol.face_planarity,
              where + ": vertices are not coplanar");

    // Fan triangulation; each triangle must agree with the face normal,
    // which also rejects non-convex loops.
    for (std::size_t a = 1; a + 1 < m; ++a) {
      const Vec3d& p0 = face.loop_[0];
      const Vec3d& p1 = face.loop_[a];
      const Vec3d& p2 = face.loop_[a + 1];
      const Vec3d c = (p1 - p0).cross(p2 - p0);
      require(c.dot(face.normal_) > 1e-14, where + ": non-convex or inconsistently wound face");
      face.triangles_.push_back({p0, p1, p2});
      six_volume += p0.dot(p1.cross(p2));
    }

    for (std::size_t a = 0; a < m; ++a) {
      const int from = loop[a];
      const int to = loop[(a + 1) % m];
      half_edges[{std::min(from, to), std::max(from, to)}].push_back(
          {static_cast<int>(fi), from, to});
    }
    part.faces_.push_back(std::move(face));
  }

  for (const auto& [key, halves] : half_edges) {
    std::ostringstream what;
    what << "part '" << part.id_ << "', edge (" << key.first << "," << key.second << ")";
    require(halves.size() == 2, what.str() + ": non-manifold (shared by " +
                                    std::to_string(halves.size()) + " faces)");
    require(halves[0].from == halves[1].to && halves[0].to == halves[1].from,
            what.str() + ": adjacent faces are inconsistently oriented");
  }

  require(six_volume > 0.0, "part '" + part.id_ + "': inverted orientation (negative volume)");
  part.volume_ = six_volume / 6.0;

  Vec3d centroid = Vec3d::Zero();
  for (const Vec3d& v : part.vertices_) centroid += v;
  part.centroid_ = centroid / static_cast<double>(n_vertices);

  for (const auto& kv : half_edges) {
    const auto& halves = kv.second;
    const Vec3d p0 = part.vertices_[static_cast<std::size_t>(halves[0].from)];
    const Vec3d p1 = part.vertices_[static_cast<std::size_t>(halves[0].to)];
    const OrientedFace& f1 = part.faces_[static_cast<std::size_t>(halves[0].face)];
    const OrientedFace& f2 = part.faces_[static_cast<std::size_t>(halves[1].face)];
    // m lies in the face plane, orthogonal to the edge, outward from the
    // face interior: traversal direction crossed with the face normal.
    const Vec3d d1 = (p1 - p0).normalized();
    const Vec3d m1 = d1.cross(f1.normal()).normalized();
    const Vec3d m2 = (-d1).cross(f2.normal()).normalized();
    part.edges_.emplace_back(f1.normal(), m1, f2.normal(), m2, p0, p1);
  }

  return part;
}

PolyhedralPart build_part(const PartSpec& spec, std::string id) {
  return PolyhedralPartBuilderAccess::build(spec, std::move(id));
}

// ---------------------------------------------------------------------------
// Canned parts

PolyhedralPart unit_cube() {
  PartSpec s;
  s.vertices = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
  s.faces = {
      {0, 3, 2, 1},  // z = 0
      {4, 5, 6, 7},  // z = 1
      {0, 1, 5, 4},  // y = 0
      {2, 3, 7, 6},  // y = 1
      {0, 4, 7, 3},  // x = 0
      {1, 2, 6, 5},  // x = 1
  };
  return build_part(s, "cube");
}

PolyhedralPart regular_tetrahedron() {
  PartSpec s;
  s.vertices = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  s.faces = {
      {1, 3, 2},  // opposite vertex 0
      {0, 2, 3},  // opposite vertex 1
      {0, 3, 1},  // opposite vertex 2
      {0, 1, 2},  // opposite vertex 3
  };
  return build_part(s, "tetrahedron");
}

PolyhedralPart wedge() {
  PartSpec s;
  s.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}};
  s.faces = {
      {0, 2, 1},     // z = 0
      {3, 4, 5},     // z = 1
      {0, 1, 4, 3},  // y = 0
      {0, 3, 5, 2},  // x = 0
      {1, 2, 5, 4},  // slant x + y = 1
  };
  return build_part(s, "wedge");
}

PolyhedralPart chamfered_cube() {
  PartSpec s;
  s.vertices = {
      {0, 0, 0},      // 0
      {1, 0, 0},      // 1
      {1, 1, 0},      // 2
      {0, 1, 0},      // 3
      {0, 0, 1},      // 4
      {1, 0, 1},      // 5
      {0, 1, 1},      // 6
      {1, 1, 0.5},    // 7  cut on the edge (1,1,0)-(1,1,1)
      {1, 0.5, 1},    // 8  cut on the edge (1,0,1)-(1,1,1)
      {0.5, 1, 1},    // 9  cut on the edge (0,1,1)-(1,1,1)
  };
  s.faces = {
      {0, 3, 2, 1},     // z = 0
      {4, 5, 8, 9, 6},  // z = 1
      {0, 1, 5, 4},     // y = 0
      {2, 3, 6, 9, 7},  // y = 1
      {0, 4, 6, 3},     // x = 0
      {1, 2, 7, 8, 5},  // x = 1
      {7, 9, 8},        // chamfer, outward (1,1,1)/sqrt(3)
  };
  return build_part(s, "chamfered-cube");
}

const std::vector<std::string>& canned_part_names() {
  static const std::vector<std::string> names = {"cube", "tetrahedron", "wedge", "chamfered-cube"};
  return names;
}

std::optional<PolyhedralPart> make_canned_part(std::string_view name) {
  if (name == "cube") return unit_cube();
  if (name == "tetrahedron") return regular_tetrahedron();
  if (name == "wedge") return wedge();
  if (name == "chamfered-cube") return chamfered_cube();
  return std::nullopt;
}

std::vector<PolyhedralPart> canned_parts() {
  std::vector<PolyhedralPart> parts;
  for (const std::string& n : canned_part_names()) parts.push_back(*make_canned_part(n));
  return parts;
}

// ---------------------------------------------------------------------------

namespace {

void check_order(int order, int degree, const char* what) {
  if (order < degree)
    throw std::invalid_argument(std::string(what) +
                                ": declared order below the integrand's polynomial degree");
}

}  // namespace

double integrate_volume(const ScalarField& f, const PolyhedralPart& part, int order) {
  check_order(order, f.degree(), "integrate_volume");
  return integrate_volume([&f](const Vec3d& x) { return f(x); }, part, order);
}

double integrate_face(const ScalarField& f, const OrientedFace& face, int order) {
  check_order(order, f.degree(), "integrate_face");
  return integrate_face([&f](const Vec3d& x) { return f(x); }, face, order);
}

double integrate_edge(const ScalarField& f, const EdgeFrame& edge, int order) {
  check_order(order, f.degree(), "integrate_edge");
  return integrate_edge([&f](const Vec3d& x) { return f(x); }, edge, order);
}

std::vector<Vec3d> volume_quadrature_points(const PolyhedralPart& part, int degree) {
  std::vector<Vec3d> pts;
  for (const auto& face : part.faces())
    for (const auto& tri : face.triangles())
      for (const auto& wp :
           detail::tetrahedron_nodes(part.centroid(), tri[0], tri[1], tri[2], degree))
        pts.push_back(wp.x);
  return pts;
}

}  // namespace hsk
