#include "curvemetrics/path.hpp"

#include <algorithm>
#include <cmath>

namespace curvemetrics {

namespace {

Eigen::VectorXd stacked_weights(const DiscreteCurve& c) {
  const Eigen::Index n = c.n();
  Eigen::VectorXd w(2 * n);
  w.head(n) = c.ds_weights().values.matrix();
  w.tail(n) = c.ds_weights().values.matrix();
  return w;
}

// W L, symmetric once L is W-self-adjoint; the quadratic form of the energy.
Eigen::MatrixXd weighted_form(const DiscreteCurve& c, const LinOp& L) {
  return stacked_weights(c).asDiagonal() * L.entries();
}

double residual_of(const LinOp& L, const Eigen::VectorXd& vstacked) {
  const DiscreteCurve& c = L.curve();
  const Eigen::VectorXd lh = L.entries() * vstacked;
  const Eigen::Index n = c.n();
  const Eigen::ArrayXd lx = lh.head(n).array(), ly = lh.tail(n).array();
  const Eigen::ArrayXd tang = lx * c.tangent().x + ly * c.tangent().y;
  const double den2 = ((lx.square() + ly.square()) * c.ds_weights().values).sum();
  if (den2 <= 0.0) return 0.0;
  return std::sqrt((tang.square() * c.ds_weights().values).sum() / den2);
}

}  // namespace

CurvePath make_path(std::vector<DiscreteCurve> curves) {
  if (curves.size() < 2) throw ParseError("a path needs at least two curves");
  const Eigen::Index n = curves.front().n();
  for (const auto& c : curves)
    if (c.n() != n) throw GridMismatch("path curves on different grids");
  return CurvePath{std::move(curves)};
}

double path_energy(const CurvePath& p, const OperatorBuilder& builder) {
  const Eigen::Index m = p.m();
  const double dt = p.dt();
  std::vector<Eigen::MatrixXd> q;
  q.reserve(static_cast<size_t>(m));
  for (const auto& c : p.curves) {
    auto ptr = std::make_shared<const DiscreteCurve>(c);
    q.push_back(weighted_form(c, builder(ptr)));
  }
  double e = 0.0;
  for (Eigen::Index k = 0; k + 1 < m; ++k) {
    const Eigen::VectorXd v =
        (p.curves[static_cast<size_t>(k + 1)].points().stacked() -
         p.curves[static_cast<size_t>(k)].points().stacked()) /
        dt;
    e += 0.5 * dt *
         (v.dot(q[static_cast<size_t>(k)] * v) + v.dot(q[static_cast<size_t>(k + 1)] * v));
  }
  return e;
}

std::vector<double> path_horizontality_report(const CurvePath& p, const OperatorBuilder& builder) {
  std::vector<double> out;
  const double dt = p.dt();
  for (Eigen::Index k = 0; k + 1 < p.m(); ++k) {
    const auto& c = p.curves[static_cast<size_t>(k)];
    auto ptr = std::make_shared<const DiscreteCurve>(c);
    const LinOp L = builder(ptr);
    const Eigen::VectorXd v =
        (p.curves[static_cast<size_t>(k + 1)].points().stacked() - c.points().stacked()) / dt;
    out.push_back(residual_of(L, v));
  }
  return out;
}

namespace {

struct FrozenState {
  std::vector<std::shared_ptr<const DiscreteCurve>> curves;
  std::vector<Eigen::MatrixXd> q;  // W L per node
  double energy = 0.0;
};

double energy_of(const std::vector<Eigen::VectorXd>& pts, const FrozenState& st, double dt) {
  double e = 0.0;
  for (size_t k = 0; k + 1 < pts.size(); ++k) {
    const Eigen::VectorXd v = (pts[k + 1] - pts[k]) / dt;
    e += 0.5 * dt * (v.dot(st.q[k] * v) + v.dot(st.q[k + 1] * v));
  }
  return e;
}

double max_residual_of(const std::vector<Eigen::VectorXd>& pts, const FrozenState& st, double dt) {
  double worst = 0.0;
  for (size_t k = 0; k + 1 < pts.size(); ++k) {
    const DiscreteCurve& c = *st.curves[k];
    const Eigen::VectorXd v = (pts[k + 1] - pts[k]) / dt;
    // recover L v from the stored W L
    const Eigen::VectorXd lv = stacked_weights(c).cwiseInverse().cwiseProduct(st.q[k] * v);
    const Eigen::Index n = c.n();
    const Eigen::ArrayXd lx = lv.head(n).array(), ly = lv.tail(n).array();
    const Eigen::ArrayXd tang = lx * c.tangent().x + ly * c.tangent().y;
    const double den2 = ((lx.square() + ly.square()) * c.ds_weights().values).sum();
    if (den2 <= 0.0) continue;
    worst = std::max(worst, std::sqrt((tang.square() * c.ds_weights().values).sum() / den2));
  }
  return worst;
}

}  // namespace

GeodesicResult horizontal_geodesic(const DiscreteCurve& c0, const DiscreteCurve& c1,
                                   Eigen::Index m, const OperatorBuilder& builder,
                                   const std::string& splitting_tag, const GeodesicOptions& opts) {
  if (c0.n() != c1.n()) throw GridMismatch("endpoint curves on different grids");
  if (m < 3) throw ParseError("a geodesic needs at least 3 nodes");
  const bool arc0 = splitting_tag == "arc0";
  const Eigen::Index n = c0.n();
  const double dt = 1.0 / static_cast<double>(m - 1);

  GeodesicResult res;

  std::vector<Eigen::VectorXd> pts(static_cast<size_t>(m));
  pts.front() = c0.points().stacked();
  pts.back() = c1.points().stacked();
  const bool constant_path = (pts.front() - pts.back()).cwiseAbs().maxCoeff() == 0.0;
  for (Eigen::Index j = 1; j + 1 < m; ++j) {
    const double t = static_cast<double>(j) * dt;
    Eigen::VectorXd p = constant_path ? pts.front() : (1.0 - t) * pts.front() + t * pts.back();
    if (arc0 && !constant_path) {
      const DiscreteCurve interp = reparametrize_constant_speed(
          make_curve(p.head(n).array(), p.tail(n).array()));
      p = interp.points().stacked();
    }
    pts[static_cast<size_t>(j)] = p;
  }

  auto freeze = [&](const std::vector<Eigen::VectorXd>& frames) {
    FrozenState st;
    st.curves.resize(frames.size());
    st.q.resize(frames.size());
    for (size_t k = 0; k < frames.size(); ++k) {
      st.curves[k] = std::make_shared<const DiscreteCurve>(
          make_curve(frames[k].head(n).array(), frames[k].tail(n).array()));
      st.q[k] = weighted_form(*st.curves[k], builder(st.curves[k]));
    }
    st.energy = energy_of(frames, st, dt);
    return st;
  };

  FrozenState st = freeze(pts);
  res.energies.push_back(st.energy);
  res.max_residuals.push_back(max_residual_of(pts, st, dt));

  if (constant_path) {
    res.converged = true;
  }

  for (int it = 0; !res.converged && it < opts.max_iters; ++it) {
    // frozen quadratic gradient at interior nodes, projected onto p_second
    std::vector<Eigen::VectorXd> dir(static_cast<size_t>(m));
    double gdot = 0.0;
    bool have_direction = false;
    for (Eigen::Index j = 1; j + 1 < m; ++j) {
      const size_t sj = static_cast<size_t>(j);
      const Eigen::MatrixXd bm = 0.5 * (st.q[sj - 1] + st.q[sj]);
      const Eigen::MatrixXd bp = 0.5 * (st.q[sj] + st.q[sj + 1]);
      const Eigen::VectorXd dm = pts[sj] - pts[sj - 1];
      const Eigen::VectorXd dp = pts[sj + 1] - pts[sj];
      const Eigen::VectorXd grad = (2.0 / dt) * (bm * dm - bp * dp);

      std::shared_ptr<const DiscreteCurve> proj_curve = st.curves[sj];
      if (arc0 && proj_curve->speed_deviation() >= 1e-3)
        proj_curve = std::make_shared<const DiscreteCurve>(
            reparametrize_constant_speed(*proj_curve));
      const Splitting split = build_splitting(splitting_tag, proj_curve);
      dir[sj] = -(split.p_second.entries() * grad);
      gdot += grad.dot(dir[sj]);
      if (dir[sj].cwiseAbs().maxCoeff() > 0.0) have_direction = true;
    }

    if (!have_direction || gdot >= 0.0) {
      res.converged = true;
      break;
    }

    // curvature of the frozen model along dir
    double dhd = 0.0;
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(2 * n);
    for (Eigen::Index k = 0; k + 1 < m; ++k) {
      const size_t sk = static_cast<size_t>(k);
      const Eigen::VectorXd& da = sk == 0 ? zero : dir[sk];
      const Eigen::VectorXd& db = sk + 1 == static_cast<size_t>(m) - 1 ? zero : dir[sk + 1];
      const Eigen::VectorXd delta = db - da;
      dhd += (1.0 / dt) * delta.dot((st.q[sk] + st.q[sk + 1]) * delta);
    }
    double t = dhd > 0.0 ? -gdot / dhd : 1.0;

    bool accepted = false;
    for (int bt = 0; bt < opts.max_backtracks; ++bt) {
      std::vector<Eigen::VectorXd> trial = pts;
      for (Eigen::Index j = 1; j + 1 < m; ++j)
        trial[static_cast<size_t>(j)] += t * dir[static_cast<size_t>(j)];
      FrozenState trial_state;
      try {
        trial_state = freeze(trial);
      } catch (const NotImmersed&) {
        t *= 0.5;
        continue;
      }
      if (trial_state.energy < st.energy) {
        pts = std::move(trial);
        const double prev = st.energy;
        st = std::move(trial_state);
        res.energies.push_back(st.energy);
        res.max_residuals.push_back(max_residual_of(pts, st, dt));
        res.step_sizes.push_back(t);
        ++res.iterations;
        accepted = true;
        if ((prev - st.energy) / std::max(prev, 1e-300) < opts.tol) res.converged = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      // no descent along the projected direction at any step size
      res.converged = true;
      break;
    }
  }

  std::vector<DiscreteCurve> out;
  out.reserve(static_cast<size_t>(m));
  for (const auto& p : pts) out.push_back(make_curve(p.head(n).array(), p.tail(n).array()));
  res.path = make_path(std::move(out));
  res.residuals = path_horizontality_report(res.path, builder);
  return res;
}

}  // namespace curvemetrics
