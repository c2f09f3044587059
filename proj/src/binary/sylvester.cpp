#include "xrank/binary/sylvester.hpp"

#include <algorithm>

#include "xrank/core/bipoly.hpp"

namespace xrank {

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw InvalidInput("binary form needs at least one coefficient");
  bool nz = false;
  for (const auto& x : c_) nz = nz || !x.is_zero();
  if (!nz) throw InvalidInput("zero binary form");
}

BinaryForm BinaryForm::from_plain(const std::vector<Rational>& plain) {
  const int d = static_cast<int>(plain.size()) - 1;
  std::vector<Rational> c;
  for (int i = 0; i <= d; ++i) c.push_back(plain[static_cast<std::size_t>(i)] / binom(d, i));
  return BinaryForm(std::move(c));
}

BinaryForm BinaryForm::from_mpoly(const MPoly& p) {
  if (p.nvars() != 2) throw InvalidInput("binary form must have two variables");
  if (p.is_zero()) throw InvalidInput("zero binary form");
  if (!p.is_homogeneous()) throw InvalidInput("binary form must be homogeneous");
  const int d = p.total_degree();
  std::vector<Rational> plain(static_cast<std::size_t>(d) + 1);
  for (const auto& t : p.terms()) plain[static_cast<std::size_t>(t.exps[1])] = t.coeff;
  return from_plain(plain);
}

std::vector<Rational> BinaryForm::plain() const {
  std::vector<Rational> out;
  for (int i = 0; i <= degree(); ++i) out.push_back(c_[static_cast<std::size_t>(i)] * binom(degree(), i));
  return out;
}

MPoly BinaryForm::to_mpoly() const {
  std::vector<Term> terms;
  auto p = plain();
  for (int i = 0; i <= degree(); ++i) terms.push_back({{degree() - i, i}, p[static_cast<std::size_t>(i)]});
  return MPoly::from_terms(2, std::move(terms));
}

QMatrix hankel(const BinaryForm& f, int a) {
  if (a < 0 || a > f.degree()) throw InvalidInput("catalecticant level out of range");
  return QMatrix::from_rows(hankel(f.coeffs(), a), a + 1);
}

std::vector<Rational> veronese_point(const std::vector<Rational>& t, int d) {
  std::vector<Rational> out;
  for (int i = 0; i <= d; ++i) out.push_back(pow(t[0], static_cast<unsigned>(d - i)) * pow(t[1], static_cast<unsigned>(i)));
  return out;
}

namespace {

// Points (t0:t1) of a square-free kernel form when all its roots are rational.
std::optional<std::vector<std::vector<Rational>>> rational_points(const std::vector<Rational>& h) {
  const int a = static_cast<int>(h.size()) - 1;
  UPoly<Rational> p(h);
  std::vector<std::vector<Rational>> pts;
  if (p.degree() == a - 1) pts.push_back({Rational(0), Rational(1)});
  auto roots = rational_roots(p);
  if (static_cast<int>(roots.size()) != p.degree()) return std::nullopt;
  for (const auto& r : roots) pts.push_back({Rational(1), r});
  return pts;
}

std::optional<std::vector<Rational>> solve_lambdas(const std::vector<Rational>& f,
                                                   const std::vector<std::vector<Rational>>& pts) {
  const int d = static_cast<int>(f.size()) - 1;
  Mat<Rational> m(f.size(), std::vector<Rational>(pts.size()));
  for (std::size_t k = 0; k < pts.size(); ++k) {
    auto v = veronese_point(pts[k], d);
    for (std::size_t i = 0; i < f.size(); ++i) m[i][k] = v[i];
  }
  return mat_solve(m, f, pts.size(), Rational());
}

bool reproduces(const std::vector<Rational>& f, const std::vector<std::vector<Rational>>& pts,
                const std::vector<Rational>& lambdas) {
  const int d = static_cast<int>(f.size()) - 1;
  std::vector<Rational> acc(f.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    auto v = veronese_point(pts[k], d);
    for (std::size_t i = 0; i < f.size(); ++i) acc[i] += lambdas[k] * v[i];
  }
  return acc == f;
}

}  // namespace

std::pair<SylvesterResult, RankCertificate> sylvester_rank(const BinaryForm& form, std::uint64_t seed) {
  const auto& f = form.coeffs();
  const int d = form.degree();
  SylvesterResult res;
  if (d == 0) {
    res.rank = 1;
    res.level = 0;
    RankCertificate c;
    c.kind = CertKind::Decomposition;
    c.claim = "rank 1 (constant)";
    return {res, c};
  }
  int a = 1;
  std::vector<std::vector<Rational>> ker;
  for (; a <= d; ++a) {
    ker = kernel(hankel(form, a)).basis;
    if (!ker.empty()) break;
  }
  res.level = a;
  std::mt19937_64 rng(seed * 6364136223846793005ULL + 1442695040888963407ULL);
  std::vector<Rational> h;
  bool found = false;
  for (int draw = 0; draw < 8 && !found; ++draw) {
    h.assign(static_cast<std::size_t>(a + 1), Rational());
    for (std::size_t k = 0; k < ker.size(); ++k) {
      Rational c(static_cast<long>(draw == 0 && k == 0 ? 1 : (rng() % 61)) - (draw == 0 && k == 0 ? 0 : 30));
      for (int j = 0; j <= a; ++j) h[static_cast<std::size_t>(j)] += c * ker[k][static_cast<std::size_t>(j)];
    }
    res.draws = draw + 1;
    found = binary_squarefree(h);
  }
  bool exists = found || span_has_squarefree(ker);
  // The criterion guarantees a square-free member; keep drawing until one shows up.
  for (int draw = 8; exists && !found && draw < 256; ++draw) {
    h.assign(static_cast<std::size_t>(a + 1), Rational());
    for (const auto& v : ker) {
      Rational c(static_cast<long>(rng() % 2001) - 1000);
      for (int j = 0; j <= a; ++j) h[static_cast<std::size_t>(j)] += c * v[static_cast<std::size_t>(j)];
    }
    res.draws = draw + 1;
    found = binary_squarefree(h);
  }
  res.kernel_form = h;
  res.squarefree = found;
  res.rank = exists ? a : d - a + 2;

  RankCertificate cert;
  cert.claim = "rank " + std::to_string(res.rank);
  cert.detail["level"] = a;
  cert.detail["kernel_form"] = rationals_to_json(h);
  cert.detail["squarefree"] = found;
  if (exists && found) {
    if (auto pts = rational_points(h)) {
      if (auto lam = solve_lambdas(f, *pts); lam && reproduces(f, *pts, *lam)) {
        res.points = *pts;
        res.lambdas = *lam;
      }
    }
  }
  const std::vector<Rational> fc = f;
  const std::vector<std::vector<Rational>> basis = ker;
  if (!res.points.empty()) {
    cert.kind = CertKind::Decomposition;
    Json pts = Json::array();
    for (const auto& p : res.points) pts.push_back(rationals_to_json(p));
    cert.detail["points"] = pts;
    cert.detail["coefficients"] = rationals_to_json(res.lambdas);
    auto pts_copy = res.points;
    auto lam_copy = res.lambdas;
    cert.recheck = [fc, pts_copy, lam_copy, a]() {
      // exact reproduction plus the catalecticant lower bound rank H_(a-1) = a
      if (!reproduces(fc, pts_copy, lam_copy)) return false;
      return a == 1 || rank(QMatrix::from_rows(hankel(fc, a - 1), a)) == a;
    };
  } else {
    cert.kind = CertKind::Membership;
    cert.detail["criterion"] = found ? "square-free kernel form" : "all kernel forms share a double root";
    cert.recheck = [fc, basis, h, a, found]() {
      QMatrix m = QMatrix::from_rows(hankel(fc, a), a + 1);
      for (const auto& v : basis)
        for (const auto& x : m.apply(v))
          if (!x.is_zero()) return false;
      if (a > 1 && rank(QMatrix::from_rows(hankel(fc, a - 1), a)) != a) return false;
      if (found) {
        auto image = m.apply(h);
        return binary_squarefree(h) && std::all_of(image.begin(), image.end(), [](const Rational& x) { return x.is_zero(); });
      }
      return !span_has_squarefree(basis);
    };
  }
  return {res, cert};
}

std::pair<SylvesterResult, RankCertificate> rnc_point_rank(const std::vector<Rational>& point, std::uint64_t seed) {
  if (point.empty()) throw InvalidInput("empty point");
  return sylvester_rank(BinaryForm(point), seed);
}

}  // namespace xrank
