#include "swipt/ipm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swipt/errors.hpp"

namespace swipt::ipm {

namespace {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Point {
  std::vector<Mat> s;
  Vec l;
};

struct Data {
  std::vector<int> dims;
  int nl = 0;
  Point c;
  std::vector<Point> a;
  std::vector<std::vector<char>> nz;  // nz[i][j]: row i touches block j
  Vec b;
};

Point zeros_like(const Data& d) {
  Point p;
  for (int n : d.dims) p.s.push_back(Mat::Zero(n, n));
  p.l = Vec::Zero(d.nl);
  return p;
}

double inner(const Point& x, const Point& y) {
  double v = x.l.dot(y.l);
  for (size_t j = 0; j < x.s.size(); ++j) v += x.s[j].cwiseProduct(y.s[j]).sum();
  return v;
}

double norm(const Point& x) { return std::sqrt(inner(x, x)); }

Vec apply_a(const Data& d, const Point& x) {
  const auto m = static_cast<Eigen::Index>(d.a.size());
  Vec out(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& ai = d.a[static_cast<size_t>(i)];
    double v = d.nl > 0 ? ai.l.dot(x.l) : 0.0;
    for (size_t j = 0; j < d.dims.size(); ++j) {
      if (d.nz[static_cast<size_t>(i)][j]) v += ai.s[j].cwiseProduct(x.s[j]).sum();
    }
    out(i) = v;
  }
  return out;
}

Point apply_at(const Data& d, const Vec& y) {
  Point out = zeros_like(d);
  for (size_t i = 0; i < d.a.size(); ++i) {
    const double yi = y(static_cast<Eigen::Index>(i));
    if (yi == 0.0) continue;
    const auto& ai = d.a[i];
    if (d.nl > 0) out.l += yi * ai.l;
    for (size_t j = 0; j < d.dims.size(); ++j) {
      if (d.nz[i][j]) out.s[j] += yi * ai.s[j];
    }
  }
  return out;
}

Mat sym(const Mat& m) { return 0.5 * (m + m.transpose()); }

// Largest alpha such that x + alpha dx stays in the cone (kInf if unbounded).
double max_step(const Point& x, const Point& dx) {
  double alpha = kInf;
  for (size_t j = 0; j < x.s.size(); ++j) {
    if (x.s[j].rows() == 0) continue;
    Eigen::LLT<Mat> llt(x.s[j]);
    if (llt.info() != Eigen::Success) return 0.0;
    const Mat tmp = llt.matrixL().solve(dx.s[j]);
    const Mat t = llt.matrixL().solve(tmp.transpose());
    Eigen::SelfAdjointEigenSolver<Mat> es(sym(t), Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues()(0);
    if (lmin < 0.0) alpha = std::min(alpha, -1.0 / lmin);
  }
  for (Eigen::Index i = 0; i < x.l.size(); ++i) {
    if (dx.l(i) < 0.0) alpha = std::min(alpha, -x.l(i) / dx.l(i));
  }
  return alpha;
}

void axpy(Point& x, double a, const Point& dx) {
  for (size_t j = 0; j < x.s.size(); ++j) x.s[j] = sym(x.s[j] + a * dx.s[j]);
  x.l += a * dx.l;
}

bool is_empty_block(const Mat& m) { return m.size() == 0; }

Data normalize(const RealSdpProblem& p, Vec& row_scale, double& bscale, double& cscale) {
  const size_t nb = p.block_dims.size();
  Data d;
  d.dims = p.block_dims;
  d.nl = p.lp_dim;
  for (int n : d.dims) {
    if (n < 1) throw InvalidArgument("solve_real_sdp: block dimension must be positive");
  }
  const auto m = static_cast<Eigen::Index>(p.rows.size());
  if (p.b.size() != m) throw DimensionMismatch("solve_real_sdp: b length differs from row count");

  auto densify = [&](const std::vector<Mat>& blocks, const Vec& lp, Point& out, std::vector<char>* flags) {
    out = zeros_like(d);
    if (!blocks.empty() && blocks.size() != nb) {
      throw DimensionMismatch("solve_real_sdp: wrong number of blocks");
    }
    for (size_t j = 0; j < blocks.size(); ++j) {
      if (is_empty_block(blocks[j])) continue;
      if (blocks[j].rows() != d.dims[j] || blocks[j].cols() != d.dims[j]) {
        throw DimensionMismatch("solve_real_sdp: block size mismatch");
      }
      out.s[j] = sym(blocks[j]);
      if (flags) (*flags)[j] = 1;
    }
    if (lp.size() != 0) {
      if (lp.size() != d.nl) throw DimensionMismatch("solve_real_sdp: lp size mismatch");
      out.l = lp;
    }
  };

  densify(p.c_blocks, p.c_lp, d.c, nullptr);
  d.a.resize(static_cast<size_t>(m));
  d.nz.assign(static_cast<size_t>(m), std::vector<char>(nb, 0));
  d.b = p.b;
  row_scale = Vec::Ones(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto ii = static_cast<size_t>(i);
    densify(p.rows[ii].blocks, p.rows[ii].lp, d.a[ii], &d.nz[ii]);
    const double rn = norm(d.a[ii]);
    if (rn == 0.0) throw InvalidArgument("solve_real_sdp: constraint row is identically zero");
    row_scale(i) = rn;
    for (auto& s : d.a[ii].s) s /= rn;
    d.a[ii].l /= rn;
    d.b(i) /= rn;
  }
  const double bn = d.b.norm();
  bscale = bn > 0.0 ? bn : 1.0;
  d.b /= bscale;
  const double cn = norm(d.c);
  cscale = cn > 0.0 ? cn : 1.0;
  for (auto& s : d.c.s) s /= cscale;
  d.c.l /= cscale;
  return d;
}

struct Residuals {
  Vec rp;
  Point rd;
  double pobj = 0.0, dobj = 0.0, gap = 0.0;
  double pinf = 0.0, dinf = 0.0, relgap = 0.0;
};

Residuals residuals(const Data& d, const Point& x, const Vec& y, const Point& z) {
  Residuals r;
  r.rp = d.b - apply_a(d, x);
  r.rd = d.c;
  const Point aty = apply_at(d, y);
  for (size_t j = 0; j < d.dims.size(); ++j) r.rd.s[j] -= z.s[j] + aty.s[j];
  r.rd.l -= z.l + aty.l;
  r.pobj = inner(d.c, x);
  r.dobj = d.b.dot(y);
  r.gap = inner(x, z);
  r.pinf = r.rp.norm() / (1.0 + d.b.norm());
  r.dinf = norm(r.rd) / (1.0 + norm(d.c));
  const double denom = 1.0 + std::abs(r.pobj) + std::abs(r.dobj);
  r.relgap = std::max(std::abs(r.gap), std::abs(r.pobj - r.dobj)) / denom;
  return r;
}

struct Direction {
  Point dx;
  Vec dy;
  Point dz;
};

}  // namespace

RealSdpSolution solve_real_sdp(const RealSdpProblem& problem, const IpmOptions& opt) {
  Vec row_scale;
  double bscale = 1.0, cscale = 1.0;
  const Data d = normalize(problem, row_scale, bscale, cscale);
  const auto m = static_cast<Eigen::Index>(d.a.size());
  const size_t nb = d.dims.size();
  double n_total = d.nl;
  for (int n : d.dims) n_total += n;

  // Starting point: scaled identities sized from the normalized data.
  Point x = zeros_like(d);
  Point z = zeros_like(d);
  for (size_t j = 0; j < nb; ++j) {
    const double n = d.dims[j];
    double amax = 0.0, bterm = 0.0;
    for (size_t i = 0; i < d.a.size(); ++i) {
      const double an = d.a[i].s[j].norm();
      amax = std::max(amax, an);
      bterm = std::max(bterm, (1.0 + std::abs(d.b(static_cast<Eigen::Index>(i)))) / (1.0 + an));
    }
    const double xi = std::max({10.0, std::sqrt(n), n * bterm});
    const double eta = std::max({10.0, std::sqrt(n), amax, d.c.s[j].norm()});
    x.s[j] = xi * Mat::Identity(d.dims[j], d.dims[j]);
    z.s[j] = eta * Mat::Identity(d.dims[j], d.dims[j]);
  }
  if (d.nl > 0) {
    x.l = Vec::Constant(d.nl, 10.0);
    z.l = Vec::Constant(d.nl, 10.0);
  }
  Vec y = Vec::Zero(m);

  RealSdpSolution sol;
  auto finish = [&](SolveStatus status, const Residuals& r, int iters) {
    sol.status = status;
    sol.iterations = iters;
    sol.X.clear();
    sol.Z.clear();
    for (size_t j = 0; j < nb; ++j) {
      sol.X.push_back(x.s[j] * bscale);
      sol.Z.push_back(z.s[j] * cscale);
    }
    sol.x_lp = x.l * bscale;
    sol.z_lp = z.l * cscale;
    sol.y = Vec(m);
    for (Eigen::Index i = 0; i < m; ++i) sol.y(i) = y(i) * cscale / row_scale(i);
    sol.primal_objective = r.pobj * bscale * cscale;
    sol.dual_objective = r.dobj * bscale * cscale;
    sol.primal_residual = r.pinf;
    sol.dual_residual = r.dinf;
    sol.relative_gap = r.relgap;
    return sol;
  };

  auto infeasibility = [&](const Residuals& r, double tol) -> SolveStatus {
    if (r.dobj > 0.0) {
      Point ray = d.c;
      for (size_t j = 0; j < nb; ++j) ray.s[j] -= r.rd.s[j];
      ray.l -= r.rd.l;
      if (norm(ray) / r.dobj <= tol && r.dobj > 1.0 / std::sqrt(tol)) return SolveStatus::Infeasible;
    }
    if (r.pobj < 0.0) {
      const double ax = apply_a(d, x).norm();
      if (ax / -r.pobj <= tol && -r.pobj > 1.0 / std::sqrt(tol)) return SolveStatus::Unbounded;
    }
    return SolveStatus::NumericalTrouble;
  };

  Residuals r;
  int stalls = 0;
  int iter = 0;
  for (; iter < opt.max_iter; ++iter) {
    r = residuals(d, x, y, z);
    if (!std::isfinite(r.pinf) || !std::isfinite(r.dinf) || !std::isfinite(r.relgap)) break;
    if (r.pinf <= opt.tol && r.dinf <= opt.tol && r.relgap <= opt.tol) {
      return finish(SolveStatus::Optimal, r, iter);
    }
    const SolveStatus inf = infeasibility(r, opt.infeas_tol);
    if (inf != SolveStatus::NumericalTrouble) return finish(inf, r, iter);

    const double mu = r.gap / n_total;

    // Inverses of Z and the Schur complement of the HKM system.
    std::vector<Mat> zinv(nb);
    bool ok = true;
    for (size_t j = 0; j < nb; ++j) {
      Eigen::LLT<Mat> llt(z.s[j]);
      if (llt.info() != Eigen::Success) {
        ok = false;
        break;
      }
      zinv[j] = sym(llt.solve(Mat::Identity(d.dims[j], d.dims[j])));
    }
    if (!ok) break;
    Vec lp_ratio = d.nl > 0 ? Vec(x.l.cwiseQuotient(z.l)) : Vec();

    Mat schur = Mat::Zero(m, m);
    for (size_t j = 0; j < nb; ++j) {
      for (size_t i = 0; i < d.a.size(); ++i) {
        if (!d.nz[i][j]) continue;
        const Mat g = x.s[j] * d.a[i].s[j] * zinv[j];
        for (size_t k = 0; k <= i; ++k) {
          if (!d.nz[k][j]) continue;
          const double v = d.a[k].s[j].cwiseProduct(g).sum();
          schur(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) += v;
          if (k != i) schur(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) += v;
        }
      }
    }
    if (d.nl > 0) {
      Mat al(m, d.nl);
      for (Eigen::Index i = 0; i < m; ++i) al.row(i) = d.a[static_cast<size_t>(i)].l.transpose();
      schur += al * lp_ratio.asDiagonal() * al.transpose();
    }
    schur = sym(schur);
    Eigen::LLT<Mat> schur_llt(schur);
    if (schur_llt.info() != Eigen::Success) {
      const double reg = 1e-14 * std::max(1.0, schur.diagonal().maxCoeff());
      schur_llt.compute(schur + reg * Mat::Identity(m, m));
      if (schur_llt.info() != Eigen::Success) break;
    }

    // X Rd Z^{-1} does not depend on the centering target.
    Point xrdz = zeros_like(d);
    for (size_t j = 0; j < nb; ++j) xrdz.s[j] = x.s[j] * r.rd.s[j] * zinv[j];
    if (d.nl > 0) xrdz.l = lp_ratio.cwiseProduct(r.rd.l);
    const Vec a_xrdz = apply_a(d, xrdz);

    auto solve_direction = [&](const Point& rc) {
      Direction dir;
      const Vec rhs = r.rp - apply_a(d, rc) + a_xrdz;
      dir.dy = schur_llt.solve(rhs);
      const Point atdy = apply_at(d, dir.dy);
      dir.dz = r.rd;
      dir.dx = rc;
      for (size_t j = 0; j < nb; ++j) {
        dir.dz.s[j] -= atdy.s[j];
        dir.dx.s[j] = rc.s[j] - sym(x.s[j] * dir.dz.s[j] * zinv[j]);
      }
      if (d.nl > 0) {
        dir.dz.l -= atdy.l;
        dir.dx.l = rc.l - lp_ratio.cwiseProduct(dir.dz.l);
      }
      return dir;
    };

    // Predictor.
    Point rc = zeros_like(d);
    for (size_t j = 0; j < nb; ++j) rc.s[j] = -x.s[j];
    rc.l = -x.l;
    const Direction pred = solve_direction(rc);
    const double ap = std::min(1.0, max_step(x, pred.dx));
    const double ad = std::min(1.0, max_step(z, pred.dz));
    Point xa = x, za = z;
    axpy(xa, ap, pred.dx);
    axpy(za, ad, pred.dz);
    const double gap_aff = inner(xa, za);
    double sigma = r.gap > 0.0 ? std::pow(std::max(gap_aff, 0.0) / r.gap, 3.0) : 0.0;
    sigma = std::clamp(sigma, 0.0, 1.0);

    // Corrector.
    for (size_t j = 0; j < nb; ++j) {
      rc.s[j] = sigma * mu * zinv[j] - x.s[j] - sym(pred.dx.s[j] * pred.dz.s[j] * zinv[j]);
    }
    if (d.nl > 0) {
      rc.l = (sigma * mu * z.l.cwiseInverse()) - x.l -
             pred.dx.l.cwiseProduct(pred.dz.l).cwiseQuotient(z.l);
    }
    const Direction corr = solve_direction(rc);
    const double sp = std::min(1.0, opt.step_fraction * max_step(x, corr.dx));
    const double sd = std::min(1.0, opt.step_fraction * max_step(z, corr.dz));
    if (!std::isfinite(sp) || !std::isfinite(sd)) break;
    axpy(x, sp, corr.dx);
    y += sd * corr.dy;
    axpy(z, sd, corr.dz);

    if (sp < 1e-10 && sd < 1e-10) {
      if (++stalls >= 3) break;
    } else {
      stalls = 0;
    }
  }

  r = residuals(d, x, y, z);
  if (r.pinf <= opt.accept_tol && r.dinf <= opt.accept_tol && r.relgap <= opt.accept_tol) {
    return finish(SolveStatus::Optimal, r, iter);
  }
  const SolveStatus inf = infeasibility(r, std::sqrt(opt.infeas_tol) * 1e-2);
  return finish(inf, r, iter);
}

}  // namespace swipt::ipm
