#include "csigma/space.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace csigma::space {

bool operator<(const Label& a, const Label& b) {
  if (a.part != b.part) return a.part < b.part;
  if (a.coord != b.coord)
    return std::lexicographical_compare(a.coord.begin(), a.coord.end(), b.coord.begin(),
                                        b.coord.end());
  return a.atom < b.atom;
}

std::string Label::str() const {
  std::string s;
  for (int p : part) {
    s += std::to_string(p);
    s += ':';
  }
  if (!coord.empty()) {
    if (coord.size() == 1) {
      s += coord[0].str();
    } else {
      s += '(';
      for (std::size_t i = 0; i < coord.size(); ++i) {
        if (i) s += ',';
        s += coord[i].str();
      }
      s += ')';
    }
  } else if (!atom.empty()) {
    s += atom;
  } else if (part.empty()) {
    s = "*";
  } else {
    s += '*';
  }
  return s;
}

namespace detail {

class SpaceImpl {
 public:
  virtual ~SpaceImpl() = default;
  virtual Label basepoint_label() const = 0;
  virtual Rational dist(const Label& a, const Label& b) const = 0;
  /// Every label within `radius` of the basepoint, no duplicates.
  virtual std::vector<Label> ball_labels(const Rational& radius) const = 0;
  virtual const std::string& kind() const = 0;
  virtual std::string describe() const = 0;
  /// Underlying impl for rebased views; identity otherwise.
  virtual std::shared_ptr<const SpaceImpl> unrebased(
      const std::shared_ptr<const SpaceImpl>& self) const {
    return self;
  }
};

namespace {

class ArithmeticRayImpl final : public SpaceImpl {
 public:
  ArithmeticRayImpl(Rational step, std::string kind) : step_(std::move(step)), kind_(std::move(kind)) {}

  Label basepoint_label() const override { return Label{{}, {Rational(0)}, ""}; }

  Rational dist(const Label& a, const Label& b) const override {
    return abs(a.coord.at(0) - b.coord.at(0));
  }

  std::vector<Label> ball_labels(const Rational& radius) const override {
    std::vector<Label> out;
    std::int64_t n = (radius / step_).floor();
    out.reserve(static_cast<std::size_t>(n + 1));
    for (std::int64_t k = 0; k <= n; ++k)
      out.push_back(Label{{}, {step_ * Rational(k)}, ""});
    return out;
  }

  const std::string& kind() const override { return kind_; }
  std::string describe() const override { return kind_ + "(step=" + step_.str() + ")"; }

 private:
  Rational step_;
  std::string kind_;
};

class LineNetImpl final : public SpaceImpl {
 public:
  LineNetImpl(Rational step, std::string kind) : step_(std::move(step)), kind_(std::move(kind)) {}

  Label basepoint_label() const override { return Label{{}, {Rational(0)}, ""}; }

  Rational dist(const Label& a, const Label& b) const override {
    return abs(a.coord.at(0) - b.coord.at(0));
  }

  std::vector<Label> ball_labels(const Rational& radius) const override {
    std::vector<Label> out;
    std::int64_t n = (radius / step_).floor();
    out.reserve(static_cast<std::size_t>(2 * n + 1));
    for (std::int64_t k = -n; k <= n; ++k)
      out.push_back(Label{{}, {step_ * Rational(k)}, ""});
    return out;
  }

  const std::string& kind() const override { return kind_; }
  std::string describe() const override { return kind_ + "(step=" + step_.str() + ")"; }

 private:
  Rational step_;
  std::string kind_;
};

class LatticeImpl final : public SpaceImpl {
 public:
  explicit LatticeImpl(int dim) : dim_(dim), kind_("lattice") {}

  Label basepoint_label() const override {
    return Label{{}, std::vector<Rational>(static_cast<std::size_t>(dim_), Rational(0)), ""};
  }

  Rational dist(const Label& a, const Label& b) const override {
    Rational d(0);
    for (int i = 0; i < dim_; ++i) d += abs(a.coord.at(i) - b.coord.at(i));
    return d;
  }

  std::vector<Label> ball_labels(const Rational& radius) const override {
    std::vector<Label> out;
    std::int64_t n = radius.floor();
    std::vector<std::int64_t> x(static_cast<std::size_t>(dim_), 0);
    enumerate(0, n, x, out);
    return out;
  }

  const std::string& kind() const override { return kind_; }
  std::string describe() const override { return "lattice(dim=" + std::to_string(dim_) + ")"; }

 private:
  void enumerate(int axis, std::int64_t budget, std::vector<std::int64_t>& x,
                 std::vector<Label>& out) const {
    if (axis == dim_) {
      Label l;
      l.coord.reserve(static_cast<std::size_t>(dim_));
      for (auto v : x) l.coord.emplace_back(v);
      out.push_back(std::move(l));
      return;
    }
    for (std::int64_t v = -budget; v <= budget; ++v) {
      x[static_cast<std::size_t>(axis)] = v;
      enumerate(axis + 1, budget - std::abs(v), x, out);
    }
  }

  int dim_;
  std::string kind_;
};

class PointCloudImpl final : public SpaceImpl {
 public:
  PointCloudImpl(std::vector<std::string> names, std::vector<std::vector<Rational>> matrix,
                 std::size_t base)
      : names_(std::move(names)), matrix_(std::move(matrix)), base_(base), kind_("point_cloud") {
    for (std::size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = i;
  }

  Label basepoint_label() const override { return Label{{}, {}, names_[base_]}; }

  Rational dist(const Label& a, const Label& b) const override {
    return matrix_[index_of(a)][index_of(b)];
  }

  std::vector<Label> ball_labels(const Rational& radius) const override {
    std::vector<Label> out;
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (matrix_[base_][i] <= radius) out.push_back(Label{{}, {}, names_[i]});
    return out;
  }

  const std::string& kind() const override { return kind_; }
  std::string describe() const override {
    return "point_cloud(n=" + std::to_string(names_.size()) + ")";
  }

 private:
  std::size_t index_of(const Label& l) const {
    auto it = index_.find(l.atom);
    if (it == index_.end()) throw SpecError("unknown point '" + l.atom + "' in point cloud");
    return it->second;
  }

  std::vector<std::string> names_;
  std::vector<std::vector<Rational>> matrix_;
  std::map<std::string, std::size_t> index_;
  std::size_t base_;
  std::string kind_;
};

class WedgeImpl final : public SpaceImpl {
 public:
  WedgeImpl(std::vector<std::shared_ptr<const SpaceImpl>> parts, std::string kind)
      : parts_(std::move(parts)), kind_(std::move(kind)) {
    part_base_.reserve(parts_.size());
    for (const auto& p : parts_) part_base_.push_back(p->basepoint_label());
  }

  Label basepoint_label() const override { return Label{}; }

  Rational dist(const Label& a, const Label& b) const override {
    if (is_base(a)) return is_base(b) ? Rational(0) : dist_to_base(b);
    if (is_base(b)) return dist_to_base(a);
    int pa = a.part.at(0), pb = b.part.at(0);
    if (pa == pb) {
      const auto& part = *parts_.at(static_cast<std::size_t>(pa - 1));
      return part.dist(inner(a), inner(b));
    }
    return dist_to_base(a) + dist_to_base(b);
  }

  std::vector<Label> ball_labels(const Rational& radius) const override {
    std::vector<Label> out;
    out.push_back(basepoint_label());
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      auto inner_labels = parts_[i]->ball_labels(radius);
      for (auto& l : inner_labels) {
        if (l == part_base_[i]) continue;
        Label outer;
        outer.part.reserve(1 + l.part.size());
        outer.part.push_back(static_cast<int>(i + 1));
        outer.part.insert(outer.part.end(), l.part.begin(), l.part.end());
        outer.coord = std::move(l.coord);
        outer.atom = std::move(l.atom);
        out.push_back(std::move(outer));
      }
    }
    return out;
  }

  const std::string& kind() const override { return kind_; }
  std::string describe() const override {
    return kind_ + "(" + std::to_string(parts_.size()) + " parts)";
  }

 private:
  static bool is_base(const Label& l) { return l.part.empty() && l.coord.empty() && l.atom.empty(); }

  Label inner(const Label& outer) const {
    Label l;
    l.part.assign(outer.part.begin() + 1, outer.part.end());
    l.coord = outer.coord;
    l.atom = outer.atom;
    return l;
  }

  Rational dist_to_base(const Label& outer) const {
    int p = outer.part.at(0);
    const auto& part = *parts_.at(static_cast<std::size_t>(p - 1));
    return part.dist(inner(outer), part_base_[static_cast<std::size_t>(p - 1)]);
  }

  std::vector<std::shared_ptr<const SpaceImpl>> parts_;
  std::vector<Label> part_base_;
  std::string kind_;
};

class RebasedImpl final : public SpaceImpl {
 public:
  RebasedImpl(std::shared_ptr<const SpaceImpl> parent, Label base)
      : parent_(std::move(parent)), base_(std::move(base)),
        offset_(parent_->dist(parent_->basepoint_label(), base_)),
        kind_(parent_->kind()) {}

  Label basepoint_label() const override { return base_; }

  Rational dist(const Label& a, const Label& b) const override { return parent_->dist(a, b); }

  std::vector<Label> ball_labels(const Rational& radius) const override {
    auto candidates = parent_->ball_labels(radius + offset_);
    std::vector<Label> out;
    for (auto& l : candidates)
      if (parent_->dist(base_, l) <= radius) out.push_back(std::move(l));
    return out;
  }

  const std::string& kind() const override { return kind_; }
  std::string describe() const override {
    return parent_->describe() + " based at " + base_.str();
  }

  std::shared_ptr<const SpaceImpl> unrebased(
      const std::shared_ptr<const SpaceImpl>&) const override {
    return parent_;
  }

 private:
  std::shared_ptr<const SpaceImpl> parent_;
  Label base_;
  Rational offset_;
  std::string kind_;
};

}  // namespace
}  // namespace detail

struct Space::Registry {
  mutable std::shared_mutex mu;
  std::deque<Label> labels;     // by id; deque keeps references stable while growing
  std::deque<Rational> dist0;   // distance to basepoint, by id
  std::map<Label, PointId> ids;
  std::optional<Rational> enumerated;
};

Space::Space(std::shared_ptr<const detail::SpaceImpl> impl)
    : impl_(std::move(impl)), registry_(std::make_shared<Registry>()) {}

PointId Space::basepoint() const {
  enumerate_ball(Rational(0));
  return 0;
}

Label Space::basepoint_label() const { return impl_->basepoint_label(); }

Rational Space::distance(const Label& a, const Label& b) const { return impl_->dist(a, b); }

Rational Space::distance(PointId a, PointId b) const {
  std::shared_lock lock(registry_->mu);
  return impl_->dist(registry_->labels.at(static_cast<std::size_t>(a)),
                     registry_->labels.at(static_cast<std::size_t>(b)));
}

std::vector<PointId> Space::enumerate_ball(const Rational& radius) const {
  std::size_t n = ball_size(radius);
  std::vector<PointId> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<PointId>(i);
  return out;
}

std::size_t Space::ball_size(const Rational& radius) const {
  if (radius.is_negative()) return 0;
  auto& reg = *registry_;
  {
    std::shared_lock lock(reg.mu);
    if (reg.enumerated && radius <= *reg.enumerated) {
      auto it = std::upper_bound(reg.dist0.begin(), reg.dist0.end(), radius);
      return static_cast<std::size_t>(it - reg.dist0.begin());
    }
  }
  std::unique_lock lock(reg.mu);
  if (!reg.enumerated || *reg.enumerated < radius) {
    auto base = impl_->basepoint_label();
    auto labels = impl_->ball_labels(radius);
    std::vector<std::pair<Rational, Label>> ordered;
    ordered.reserve(labels.size());
    for (auto& l : labels) {
      Rational d = impl_->dist(base, l);
      ordered.emplace_back(std::move(d), std::move(l));
    }
    std::sort(ordered.begin(), ordered.end());
    if (ordered.size() < reg.labels.size())
      throw InternalError("ball enumeration shrank; presentation is not monotone");
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      if (i < reg.labels.size()) {
        if (!(reg.labels[i] == ordered[i].second))
          throw InternalError("ball enumeration reordered existing points");
        continue;
      }
      reg.ids.emplace(ordered[i].second, static_cast<PointId>(i));
      reg.labels.push_back(std::move(ordered[i].second));
      reg.dist0.push_back(std::move(ordered[i].first));
    }
    reg.enumerated = radius;
  }
  auto it = std::upper_bound(reg.dist0.begin(), reg.dist0.end(), radius);
  return static_cast<std::size_t>(it - reg.dist0.begin());
}

const Label& Space::label(PointId id) const {
  std::shared_lock lock(registry_->mu);
  return registry_->labels.at(static_cast<std::size_t>(id));
}

const Rational& Space::distance_to_basepoint(PointId id) const {
  std::shared_lock lock(registry_->mu);
  return registry_->dist0.at(static_cast<std::size_t>(id));
}

std::optional<PointId> Space::find(const Label& label, const Rational& radius) const {
  ball_size(radius);
  std::shared_lock lock(registry_->mu);
  auto it = registry_->ids.find(label);
  if (it == registry_->ids.end()) return std::nullopt;
  if (registry_->dist0[static_cast<std::size_t>(it->second)] > radius) return std::nullopt;
  return it->second;
}

Space Space::with_basepoint(const Label& new_basepoint) const {
  auto parent = impl_->unrebased(impl_);
  return Space(std::make_shared<detail::RebasedImpl>(parent, new_basepoint));
}

const std::string& Space::kind() const { return impl_->kind(); }

std::string Space::describe() const { return impl_->describe(); }

Space point_cloud(std::vector<std::string> names, std::vector<std::vector<Rational>> distances,
                  std::size_t basepoint_index) {
  const std::size_t n = names.size();
  if (n == 0) throw SpecError("point cloud needs at least one point");
  if (basepoint_index >= n) throw SpecError("point cloud basepoint index out of range");
  if (distances.size() != n) throw SpecError("point cloud distance matrix is not square");
  for (const auto& row : distances)
    if (row.size() != n) throw SpecError("point cloud distance matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (!distances[i][i].is_zero())
      throw SpecError("d(" + names[i] + "," + names[i] + ") != 0");
    for (std::size_t j = 0; j < n; ++j) {
      if (distances[i][j].is_negative())
        throw SpecError("negative distance d(" + names[i] + "," + names[j] + ")");
      if (distances[i][j] != distances[j][i])
        throw SpecError("asymmetric distances between " + names[i] + " and " + names[j]);
      if (i != j && distances[i][j].is_zero())
        throw SpecError("zero distance between distinct points " + names[i] + " and " + names[j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (distances[i][k] > distances[i][j] + distances[j][k])
          throw SpecError("triangle violation at (" + names[i] + "," + names[j] + "," + names[k] +
                          "): d(" + names[i] + "," + names[k] + ")=" + distances[i][k].str() +
                          " > " + (distances[i][j] + distances[j][k]).str());
  return Space(std::make_shared<detail::PointCloudImpl>(std::move(names), std::move(distances),
                                                        basepoint_index));
}

Space integer_ray() {
  return Space(std::make_shared<detail::ArithmeticRayImpl>(Rational(1), "integer_ray"));
}

Space discrete_ray(const Rational& spacing) {
  if (!(Rational(0) < spacing)) throw SpecError("discrete ray spacing must be positive");
  return Space(std::make_shared<detail::ArithmeticRayImpl>(spacing, "discrete_ray"));
}

Space ray_net(const Rational& delta) {
  if (!(Rational(0) < delta)) throw SpecError("net spacing must be positive");
  return Space(std::make_shared<detail::ArithmeticRayImpl>(delta, "ray_net"));
}

Space real_line(const Rational& delta) {
  if (!(Rational(0) < delta)) throw SpecError("net spacing must be positive");
  return Space(std::make_shared<detail::LineNetImpl>(delta, "real_line"));
}

Space integer_line() {
  return Space(std::make_shared<detail::LineNetImpl>(Rational(1), "integer_line"));
}

Space lattice(int dim) {
  if (dim < 1 || dim > 3) throw SpecError("lattice dimension must be 1, 2 or 3");
  return Space(std::make_shared<detail::LatticeImpl>(dim));
}

namespace {

Space make_wedge(std::vector<Space> parts, std::string kind) {
  if (parts.empty()) throw SpecError("metric wedge of an empty family");
  std::vector<std::shared_ptr<const detail::SpaceImpl>> impls;
  impls.reserve(parts.size());
  for (auto& p : parts) {
    if (!p.valid()) throw SpecError("invalid wedge part");
    impls.push_back(p.impl());
  }
  return Space(std::make_shared<detail::WedgeImpl>(std::move(impls), std::move(kind)));
}

}  // namespace

Space metric_wedge(std::vector<Space> parts) { return make_wedge(std::move(parts), "wedge"); }

Space open_book(int num_rays, const Rational& delta) {
  if (num_rays < 1) throw SpecError("open book needs at least one ray");
  if (!(Rational(0) < delta)) throw SpecError("net spacing must be positive");
  std::vector<Space> rays;
  rays.reserve(static_cast<std::size_t>(num_rays));
  for (int i = 0; i < num_rays; ++i) rays.push_back(ray_net(delta));
  return make_wedge(std::move(rays), "open_book");
}

Space discrete_open_book(int num_rays) {
  if (num_rays < 1) throw SpecError("discrete open book needs at least one ray");
  std::vector<Space> rays;
  rays.reserve(static_cast<std::size_t>(num_rays));
  for (int i = 1; i <= num_rays; ++i) rays.push_back(discrete_ray(Rational(i)));
  return make_wedge(std::move(rays), "discrete_open_book");
}

}  // namespace csigma::space
