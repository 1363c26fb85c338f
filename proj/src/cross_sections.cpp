#include "blochspace/cross_sections.hpp"

#include "blochspace/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace blochspace {

namespace {

const double kSqrt6 = std::sqrt(6.0);
const double kTraceBound = 2.0 / 3.0;

}  // namespace

// --------------------------------------------------------------------------
// Qubit

double qubit_norm_sq(double x, double alpha, double beta) {
  return x * x + 2.0 * (alpha * alpha + beta * beta);
}

std::array<double, 3> qubit_surface(double t, double u) {
  const double pi = 3.14159265358979323846;
  if (t < 0.0 || t > pi)
    throw std::invalid_argument("qubit_surface: t must lie in [0, pi]");
  if (u < 0.0 || u > 2.0 * pi)
    throw std::invalid_argument("qubit_surface: u must lie in [0, 2 pi]");
  double rho = 0.5 * std::sin(t);
  return {rho * std::cos(u), rho * std::sin(u), std::cos(t) / std::sqrt(2.0)};
}

// --------------------------------------------------------------------------
// Qutrit closed forms

BlochVector qutrit_bloch(const QutritParams& q) {
  BlochVector v(2);
  v.set_component(1, 0, q.x);
  v.set_component(1, 1, Complex(q.a, q.b));
  v.set_component(2, 0, q.y);
  v.set_component(2, 1, Complex(q.alpha1, q.beta1));
  v.set_component(2, 2, Complex(q.alpha2, q.beta2));
  return v;
}

QutritParams qutrit_params(const BlochVector& v) {
  if (v.two_j() != 2)
    throw std::invalid_argument("qutrit_params: vector is not a qutrit (two_j != 2)");
  QutritParams q;
  q.x = v.component(1, 0).real();
  q.a = v.component(1, 1).real();
  q.b = v.component(1, 1).imag();
  q.y = v.component(2, 0).real();
  q.alpha1 = v.component(2, 1).real();
  q.beta1 = v.component(2, 1).imag();
  q.alpha2 = v.component(2, 2).real();
  q.beta2 = v.component(2, 2).imag();
  return q;
}

double qutrit_norm_sq(const QutritParams& q) {
  return q.x * q.x + q.y * q.y +
         2.0 * (q.a * q.a + q.b * q.b + q.alpha1 * q.alpha1 + q.beta1 * q.beta1 +
                q.alpha2 * q.alpha2 + q.beta2 * q.beta2);
}

double qutrit_t3(const QutritParams& q) {
  double t3 = (3.0 * q.x * q.x * q.y - q.y * q.y * q.y) / kSqrt6;
  t3 += 3.0 * std::sqrt(2.0) * q.x * (q.a * q.alpha1 + q.b * q.beta1);
  t3 += std::sqrt(1.5) * q.y *
        (2.0 * q.alpha2 * q.alpha2 + 2.0 * q.beta2 * q.beta2 - q.a * q.a -
         q.b * q.b - q.alpha1 * q.alpha1 - q.beta1 * q.beta1);
  t3 += 3.0 * (q.alpha2 * (q.a * q.a - q.b * q.b - q.alpha1 * q.alpha1 +
                           q.beta1 * q.beta1) +
               2.0 * q.beta2 * (q.a * q.b - q.alpha1 * q.beta1));
  return t3;
}

double qutrit_f(const QutritParams& q) {
  return 1.0 / 9.0 - 0.5 * qutrit_norm_sq(q) + qutrit_t3(q);
}

// --------------------------------------------------------------------------
// Section families

const char* axis_name(QutritAxis axis) {
  switch (axis) {
    case QutritAxis::X: return "x";
    case QutritAxis::A: return "a";
    case QutritAxis::B: return "b";
    case QutritAxis::Y: return "y";
    case QutritAxis::Alpha1: return "alpha1";
    case QutritAxis::Beta1: return "beta1";
    case QutritAxis::Alpha2: return "alpha2";
    case QutritAxis::Beta2: return "beta2";
  }
  throw std::invalid_argument("axis_name: bad axis");
}

QutritAxis axis_from_name(const std::string& name) {
  static const std::map<std::string, QutritAxis> table = {
      {"x", QutritAxis::X},           {"a", QutritAxis::A},
      {"b", QutritAxis::B},           {"y", QutritAxis::Y},
      {"alpha1", QutritAxis::Alpha1}, {"beta1", QutritAxis::Beta1},
      {"alpha2", QutritAxis::Alpha2}, {"beta2", QutritAxis::Beta2}};
  auto it = table.find(name);
  if (it == table.end())
    throw std::invalid_argument("unknown qutrit parameter '" + name + "'");
  return it->second;
}

const char* section_name(SectionTag tag) {
  switch (tag) {
    case SectionTag::I: return "I";
    case SectionTag::II: return "II";
    case SectionTag::III: return "III";
    case SectionTag::IV: return "IV";
    case SectionTag::V: return "V";
    case SectionTag::VI: return "VI";
    case SectionTag::VII: return "VII";
  }
  throw std::invalid_argument("section_name: bad tag");
}

SectionTag section_from_name(const std::string& name) {
  static const std::map<std::string, SectionTag> table = {
      {"I", SectionTag::I},   {"II", SectionTag::II},   {"III", SectionTag::III},
      {"IV", SectionTag::IV}, {"V", SectionTag::V},     {"VI", SectionTag::VI},
      {"VII", SectionTag::VII}};
  auto it = table.find(name);
  if (it == table.end())
    throw std::invalid_argument("unknown section type '" + name + "'");
  return it->second;
}

std::vector<SectionPair> section_members(SectionTag tag) {
  using Ax = QutritAxis;
  switch (tag) {
    case SectionTag::I:
      return {{Ax::X, Ax::Y}};
    case SectionTag::II:
      return {{Ax::Y, Ax::Alpha2}, {Ax::Y, Ax::Beta2}};
    case SectionTag::III:
      return {{Ax::A, Ax::Alpha2}, {Ax::Beta1, Ax::Alpha2}};
    case SectionTag::IV:
      return {{Ax::B, Ax::Alpha2}, {Ax::Alpha1, Ax::Alpha2}};
    case SectionTag::V:
      return {{Ax::Y, Ax::A}, {Ax::Y, Ax::B}, {Ax::Y, Ax::Alpha1}, {Ax::Y, Ax::Beta1}};
    case SectionTag::VI:
      return {{Ax::A, Ax::B},          {Ax::A, Ax::Alpha1},
              {Ax::A, Ax::Beta1},      {Ax::A, Ax::Beta2},
              {Ax::B, Ax::Alpha1},     {Ax::B, Ax::Beta1},
              {Ax::B, Ax::Beta2},      {Ax::Alpha1, Ax::Beta1},
              {Ax::Alpha1, Ax::Beta2}, {Ax::Beta1, Ax::Beta2},
              {Ax::Alpha2, Ax::Beta2}};
    case SectionTag::VII:
      return {{Ax::X, Ax::A},     {Ax::X, Ax::B},      {Ax::X, Ax::Alpha1},
              {Ax::X, Ax::Beta1}, {Ax::X, Ax::Alpha2}, {Ax::X, Ax::Beta2}};
  }
  throw std::invalid_argument("section_members: bad tag");
}

SectionTag section_type(const SectionPair& pair) {
  for (SectionTag tag : {SectionTag::I, SectionTag::II, SectionTag::III,
                         SectionTag::IV, SectionTag::V, SectionTag::VI,
                         SectionTag::VII})
    for (const SectionPair& m : section_members(tag))
      if (m == pair || (m.s == pair.t && m.t == pair.s)) return tag;
  throw std::invalid_argument(std::string("section_type: (") + axis_name(pair.s) +
                              ", " + axis_name(pair.t) + ") is not a parameter pair");
}

SectionPair canonical_pair(const SectionPair& pair) {
  SectionTag tag = section_type(pair);
  for (const SectionPair& m : section_members(tag))
    if (m == pair || (m.s == pair.t && m.t == pair.s)) return m;
  throw std::logic_error("canonical_pair: unreachable");
}

double section_f(SectionTag tag, double s, double t) {
  switch (tag) {
    case SectionTag::I:
      return 1.0 / 9.0 - 0.5 * (s * s + t * t) + (3.0 * s * s * t - t * t * t) / kSqrt6;
    case SectionTag::II:
      return 1.0 / 9.0 - 0.5 * s * s - t * t + (6.0 * t * t * s - s * s * s) / kSqrt6;
    case SectionTag::III:
      return 1.0 / 9.0 - s * s - t * t + 3.0 * s * s * t;
    case SectionTag::IV:
      return 1.0 / 9.0 - s * s - t * t - 3.0 * s * s * t;
    case SectionTag::V:
      return 1.0 / 9.0 - 0.5 * s * s - t * t - (3.0 * t * t * s + s * s * s) / kSqrt6;
    case SectionTag::VI:
      return 1.0 / 9.0 - s * s - t * t;
    case SectionTag::VII:
      return 1.0 / 9.0 - 0.5 * s * s - t * t;
  }
  throw std::invalid_argument("section_f: bad tag");
}

double section_norm_sq(SectionTag tag, double s, double t) {
  switch (tag) {
    case SectionTag::I:
      return s * s + t * t;
    case SectionTag::II:
    case SectionTag::V:
    case SectionTag::VII:
      return s * s + 2.0 * t * t;
    case SectionTag::III:
    case SectionTag::IV:
    case SectionTag::VI:
      return 2.0 * (s * s + t * t);
  }
  throw std::invalid_argument("section_norm_sq: bad tag");
}

QutritParams embed_pair(const SectionPair& pair, double s, double t) {
  QutritParams q;
  auto set = [&q](QutritAxis axis, double v) {
    switch (axis) {
      case QutritAxis::X: q.x = v; break;
      case QutritAxis::A: q.a = v; break;
      case QutritAxis::B: q.b = v; break;
      case QutritAxis::Y: q.y = v; break;
      case QutritAxis::Alpha1: q.alpha1 = v; break;
      case QutritAxis::Beta1: q.beta1 = v; break;
      case QutritAxis::Alpha2: q.alpha2 = v; break;
      case QutritAxis::Beta2: q.beta2 = v; break;
    }
  };
  if (pair.s == pair.t)
    throw std::invalid_argument("embed_pair: the two parameters must differ");
  set(pair.s, s);
  set(pair.t, t);
  return q;
}

std::vector<std::array<double, 2>> section_pure_states(SectionTag tag) {
  const double r23 = std::sqrt(2.0 / 3.0);
  switch (tag) {
    case SectionTag::I:
      return {{1.0 / std::sqrt(2.0), 1.0 / kSqrt6},
              {-1.0 / std::sqrt(2.0), 1.0 / kSqrt6},
              {0.0, -r23}};
    case SectionTag::II:
      return {{std::sqrt(1.0 / 6.0), 0.5}, {std::sqrt(1.0 / 6.0), -0.5}, {-r23, 0.0}};
    case SectionTag::III:
      return {{std::sqrt(2.0) / 3.0, 1.0 / 3.0}, {-std::sqrt(2.0) / 3.0, 1.0 / 3.0}};
    case SectionTag::IV:
      return {{std::sqrt(2.0) / 3.0, -1.0 / 3.0}, {-std::sqrt(2.0) / 3.0, -1.0 / 3.0}};
    case SectionTag::V:
      return {{-r23, 0.0}};
    case SectionTag::VI:
    case SectionTag::VII:
      return {};
  }
  throw std::invalid_argument("section_pure_states: bad tag");
}

// --------------------------------------------------------------------------
// Grid scan

namespace {

int scan_thread_count(int rows) {
  unsigned hw = std::thread::hardware_concurrency();
  int threads = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("BLOCHSPACE_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1)
      threads = std::min<long>(threads, cap);
  }
  return std::max(1, std::min(threads, rows));
}

// Marching squares for the physical branch of the F = 0 contour.  The field
// marched on is h = min(F, 2/3 - |V|^2), the margin of the physical region:
// its zero set coincides with the F = 0 contour bounding that region, because
// F <= 0 everywhere on the |V|^2 = 2/3 sphere (3 det rho <= 0 there, with
// equality only at pure states), so the sphere itself never contributes an
// arc.  Marching on F directly would miss the pure-state tangency points,
// where two branches of F = 0 touch the sphere and run closer together than
// any grid cell: F returns positive on both sides and the corner signs never
// flip.  h crosses zero transversally there, so the extracted polyline passes
// through the tangencies, and branches in unphysical territory are dropped.
std::vector<std::vector<std::array<double, 2>>> extract_boundary(
    const ScanResult& res) {
  const int r = res.resolution;
  const std::vector<double>& g = res.grid;
  auto hv = [&](int is, int it) {
    size_t k = static_cast<size_t>(is) * r + it;
    return std::min(res.f[k], kTraceBound - res.norm_sq[k]);
  };
  auto inside = [&](int is, int it) { return hv(is, it) >= 0.0; };

  // Edge keys: horizontal (s-direction) edge from (is,it) to (is+1,it) and
  // vertical (t-direction) edge from (is,it) to (is,it+1).
  auto hkey = [r](int is, int it) {
    return (static_cast<int64_t>(it) * r + is) * 2;
  };
  auto vkey = [r](int is, int it) {
    return (static_cast<int64_t>(it) * r + is) * 2 + 1;
  };
  auto edge_point = [&](int64_t key) -> std::array<double, 2> {
    bool vertical = key & 1;
    int64_t cell = key >> 1;
    int is = static_cast<int>(cell % r);
    int it = static_cast<int>(cell / r);
    double h0 = hv(is, it);
    double h1 = vertical ? hv(is, it + 1) : hv(is + 1, it);
    double lam = h0 / (h0 - h1);
    if (vertical) return {g[is], g[it] + lam * (g[it + 1] - g[it])};
    return {g[is] + lam * (g[is + 1] - g[is]), g[it]};
  };

  struct Seg {
    int64_t a, b;
  };
  std::vector<Seg> segs;
  for (int it = 0; it + 1 < r; ++it)
    for (int is = 0; is + 1 < r; ++is) {
      int code = 0;
      if (inside(is, it)) code |= 1;          // bottom-left
      if (inside(is + 1, it)) code |= 2;      // bottom-right
      if (inside(is + 1, it + 1)) code |= 4;  // top-right
      if (inside(is, it + 1)) code |= 8;      // top-left
      if (code == 0 || code == 15) continue;

      int64_t bottom = hkey(is, it), top = hkey(is, it + 1);
      int64_t left = vkey(is, it), right = vkey(is + 1, it);
      auto add = [&segs](int64_t a, int64_t b) { segs.push_back({a, b}); };
      switch (code) {
        case 1: case 14: add(left, bottom); break;
        case 2: case 13: add(bottom, right); break;
        case 3: case 12: add(left, right); break;
        case 4: case 11: add(top, right); break;
        case 6: case 9:  add(bottom, top); break;
        case 7: case 8:  add(left, top); break;
        case 5: case 10: {
          double center = 0.25 * (hv(is, it) + hv(is + 1, it) + hv(is, it + 1) +
                                  hv(is + 1, it + 1));
          bool bl_inside = (code == 5);
          if ((center >= 0.0) == bl_inside) {
            add(left, top);
            add(bottom, right);
          } else {
            add(left, bottom);
            add(top, right);
          }
          break;
        }
        default: break;
      }
    }

  // Chain segments that share an edge into polylines; walking order is fixed
  // by the row-major cell scan, so output is deterministic.
  std::unordered_map<int64_t, std::vector<int>> at_edge;
  for (int i = 0; i < static_cast<int>(segs.size()); ++i) {
    at_edge[segs[i].a].push_back(i);
    at_edge[segs[i].b].push_back(i);
  }
  std::vector<bool> used(segs.size(), false);
  std::vector<std::vector<std::array<double, 2>>> polys;

  auto next_unused = [&](int64_t edge, int exclude) {
    for (int idx : at_edge[edge])
      if (!used[idx] && idx != exclude) return idx;
    return -1;
  };

  for (int i0 = 0; i0 < static_cast<int>(segs.size()); ++i0) {
    if (used[i0]) continue;
    used[i0] = true;
    std::vector<int64_t> chain = {segs[i0].a, segs[i0].b};
    // Extend forward from the tail, then backward from the head.
    for (;;) {
      int nxt = next_unused(chain.back(), -1);
      if (nxt < 0) break;
      used[nxt] = true;
      chain.push_back(segs[nxt].a == chain.back() ? segs[nxt].b : segs[nxt].a);
      if (chain.back() == chain.front()) break;  // closed loop
    }
    if (chain.back() != chain.front()) {
      for (;;) {
        int nxt = next_unused(chain.front(), -1);
        if (nxt < 0) break;
        used[nxt] = true;
        chain.insert(chain.begin(),
                     segs[nxt].a == chain.front() ? segs[nxt].b : segs[nxt].a);
      }
    }
    std::vector<std::array<double, 2>> pts;
    pts.reserve(chain.size());
    for (int64_t e : chain) pts.push_back(edge_point(e));
    polys.push_back(std::move(pts));
  }
  return polys;
}

void cross_check_grid(const ScanResult& res) {
  const int r = res.resolution;
  const double tol = res.tol;
  std::vector<int> bad(r, 0);

  int threads = scan_thread_count(r);
  std::vector<std::thread> pool;
  auto worker = [&](int lo, int hi) {
    for (int is = lo; is < hi; ++is) {
      for (int it = 0; it < r; ++it) {
        size_t k = static_cast<size_t>(is) * r + it;
        double norm = res.norm_sq[k], f = res.f[k];
        // The classification thresholds and the S_k thresholds sit at
        // slightly different multiples of tol (S_2 = 1/3 - |V|^2/2,
        // S_3 = F/3); skip the sliver where they may legitimately differ.
        if (std::abs(norm - kTraceBound) <= 10.0 * tol || std::abs(f) <= 10.0 * tol)
          continue;
        BlochVector v =
            qutrit_bloch(embed_pair(res.pair, res.grid[is], res.grid[it]));
        Verdict verdict = check_positivity(v, tol).verdict;
        bool allowed = res.cls[k] == PointClass::Allowed;
        if (allowed != (verdict != Verdict::NonPositive)) bad[is] = 1;
      }
    }
  };
  int chunk = (r + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    int lo = w * chunk, hi = std::min(r, lo + chunk);
    if (lo < hi) pool.emplace_back(worker, lo, hi);
  }
  for (std::thread& th : pool) th.join();
  for (int is = 0; is < r; ++is)
    if (bad[is])
      throw std::runtime_error(
          "scan_section: grid classification disagrees with check_positivity");
}

}  // namespace

ScanResult scan_section(const SectionPair& pair, int resolution, double tol) {
  if (resolution < 3)
    throw std::invalid_argument("scan_section: resolution must be >= 3");
  if (tol < 0.0) throw std::invalid_argument("scan_section: negative tolerance");

  ScanResult res;
  res.pair = canonical_pair(pair);
  res.tag = section_type(pair);
  res.resolution = resolution;
  res.tol = tol;
  res.grid.resize(resolution);
  for (int i = 0; i < resolution; ++i)
    res.grid[i] = -1.0 + 2.0 * i / (resolution - 1);

  size_t total = static_cast<size_t>(resolution) * resolution;
  res.norm_sq.resize(total);
  res.f.resize(total);
  res.cls.resize(total);

  int threads = scan_thread_count(resolution);
  std::vector<std::thread> pool;
  auto worker = [&](int lo, int hi) {
    for (int is = lo; is < hi; ++is) {
      double s = res.grid[is];
      for (int it = 0; it < resolution; ++it) {
        double t = res.grid[it];
        size_t k = static_cast<size_t>(is) * resolution + it;
        double norm = section_norm_sq(res.tag, s, t);
        double f = section_f(res.tag, s, t);
        res.norm_sq[k] = norm;
        res.f[k] = f;
        if (norm > kTraceBound + tol)
          res.cls[k] = PointClass::Outside;
        else
          res.cls[k] = f >= -tol ? PointClass::Allowed : PointClass::TraceBoundOnly;
      }
    }
  };
  int chunk = (resolution + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    int lo = w * chunk, hi = std::min(resolution, lo + chunk);
    if (lo < hi) pool.emplace_back(worker, lo, hi);
  }
  for (std::thread& th : pool) th.join();

  if (resolution <= 201) cross_check_grid(res);

  res.boundary = extract_boundary(res);
  res.pure_states = section_pure_states(res.tag);
  return res;
}

ScanResult scan_section(SectionTag tag, int resolution, double tol) {
  return scan_section(section_members(tag).front(), resolution, tol);
}

}  // namespace blochspace
