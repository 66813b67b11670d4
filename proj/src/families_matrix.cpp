#include "raodist/families_matrix.hpp"

#include "raodist/constants.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace raodist {

namespace {

int vech_size(int m) { return m * (m + 1) / 2; }

/// vech position of the (i, j) entry, 0-based, i <= j.
int vech_index(int m, int i, int j) {
    return i * m - i * (i - 1) / 2 + (j - i);
}

void check_square(const Mat& a) {
    if (a.rows() != a.cols()) throw DimensionError("matrix must be square");
}

void check_symmetric(const Mat& a) {
    check_square(a);
    const double scale = std::fmax(1.0, a.cwiseAbs().maxCoeff());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j)
            if (std::fabs(a(i, j) - a(j, i)) > 1e-9 * scale)
                throw DomainError("matrix must be symmetric");
}

double det3(const Mat& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

/// All-real cubic roots of x^3 + a x^2 + b x + c by the trigonometric
/// method; valid for the real-spectrum pencils arising here.
std::array<double, 3> cubic_roots_trig(double a, double b, double c) {
    const double q = (a * a - 3.0 * b) / 9.0;
    const double r = (2.0 * a * a * a - 9.0 * a * b + 27.0 * c) / 54.0;
    const double qs = std::sqrt(std::fmax(q, 0.0));
    double cosarg = 0.0;
    if (qs > 0.0) cosarg = std::clamp(r / (qs * qs * qs), -1.0, 1.0);
    const double theta = std::acos(cosarg);
    std::array<double, 3> roots;
    for (int k = 0; k < 3; ++k)
        roots[k] = -2.0 * qs * std::cos((theta + 2.0 * Constants::pi * k) / 3.0) - a / 3.0;
    return roots;
}

double multigamma_log(double a, int m) {
    double s = 0.25 * m * (m - 1) * std::log(Constants::pi);
    for (int j = 1; j <= m; ++j) s += std::lgamma(a + 0.5 * (1.0 - j));
    return s;
}

} // namespace

Vec vech(const Mat& A) {
    check_square(A);
    const int m = static_cast<int>(A.rows());
    Vec v(vech_size(m));
    int k = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) v[k++] = A(i, j);
    return v;
}

Mat unvech(const Vec& v, int m) {
    if (v.size() != vech_size(m))
        throw DimensionError("expected " + std::to_string(vech_size(m)) +
                             " upper-triangle entries");
    Mat A(m, m);
    int k = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) A(i, j) = A(j, i) = v[k++];
    return A;
}

Mat duplication_matrix(int m) {
    Mat D = Mat::Zero(m * m, vech_size(m));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i)
            D(j * m + i, vech_index(m, std::min(i, j), std::max(i, j))) = 1.0;
    return D;
}

Mat wishart_fisher_matrix(const Mat& sigma, double n) {
    check_symmetric(sigma);
    const int m = static_cast<int>(sigma.rows());
    Eigen::LLT<Mat> llt(sigma);
    if (llt.info() != Eigen::Success)
        throw DomainError("sigma must be positive definite");
    const Mat inv = llt.solve(Mat::Identity(m, m));
    Mat kron(m * m, m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            kron.block(i * m, j * m, m, m) = inv(i, j) * inv;
    const Mat D = duplication_matrix(m);
    return 0.5 * n * D.transpose() * kron * D;
}

Vec spd_geodesic_eigenvalues(const Mat& sigma1, const Mat& sigma2) {
    check_symmetric(sigma1);
    check_symmetric(sigma2);
    if (sigma1.rows() != sigma2.rows())
        throw DimensionError("matrices must have equal dimensions");
    Eigen::LLT<Mat> llt(sigma1);
    if (llt.info() != Eigen::Success)
        throw DomainError("sigma1 must be positive definite");
    const Mat L = llt.matrixL();
    Mat W = L.triangularView<Eigen::Lower>().solve(sigma2);
    W = L.triangularView<Eigen::Lower>().solve(W.transpose()).transpose();
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (W + W.transpose()));
    return es.eigenvalues();
}

double wishart_distance_matrix(const Mat& sigma1, const Mat& sigma2, double n) {
    // Canonical argument order (lexicographic in vech) makes the result
    // bitwise symmetric.
    const Vec v1 = vech(sigma1);
    const Vec v2 = vech(sigma2);
    const bool swap = std::lexicographical_compare(v2.data(), v2.data() + v2.size(),
                                                   v1.data(), v1.data() + v1.size());
    const Mat& a = swap ? sigma2 : sigma1;
    const Mat& b = swap ? sigma1 : sigma2;
    const Vec lam = spd_geodesic_eigenvalues(a, b);
    double s = 0.0;
    for (int k = 0; k < lam.size(); ++k) {
        const double l = std::log(std::fmax(lam[k], 1e-300));
        s += l * l;
    }
    return std::sqrt(0.5 * n * s);
}

Vec generalized_eigenvalues_charpoly(const Mat& sigma1, const Mat& sigma2) {
    check_square(sigma1);
    check_square(sigma2);
    if (sigma1.rows() != sigma2.rows())
        throw DimensionError("matrices must have equal dimensions");
    const int m = static_cast<int>(sigma1.rows());
    if (m == 1) {
        Vec v(1);
        v[0] = sigma2(0, 0) / sigma1(0, 0);
        return v;
    }
    if (m == 2) {
        // det(S2 - lambda S1) = c2 lambda^2 + c1 lambda + c0
        const double c2 = sigma1(0, 0) * sigma1(1, 1) - sigma1(0, 1) * sigma1(1, 0);
        const double c0 = sigma2(0, 0) * sigma2(1, 1) - sigma2(0, 1) * sigma2(1, 0);
        const double c1 = -(sigma2(0, 0) * sigma1(1, 1) + sigma2(1, 1) * sigma1(0, 0) -
                            sigma2(0, 1) * sigma1(1, 0) - sigma2(1, 0) * sigma1(0, 1));
        const double disc = std::sqrt(std::fmax(c1 * c1 - 4.0 * c2 * c0, 0.0));
        const double qq = -0.5 * (c1 + (c1 >= 0.0 ? disc : -disc));
        Vec v(2);
        v[0] = qq / c2;
        v[1] = c0 / qq;
        std::sort(v.data(), v.data() + 2);
        return v;
    }
    if (m == 3) {
        // Four-point evaluation of the cubic det(S2 - lambda S1).
        const double p0 = det3(sigma2);
        const double p1 = det3(sigma2 - sigma1);
        const double pm1 = det3(sigma2 + sigma1);
        const double p2 = det3(sigma2 - 2.0 * sigma1);
        const double c2 = 0.5 * (p1 + pm1) - p0;
        const double odd = 0.5 * (p1 - pm1);
        const double c3 = (p2 - p0 - 4.0 * c2 - 2.0 * odd) / 6.0;
        const double c1 = odd - c3;
        auto roots = cubic_roots_trig(c2 / c3, c1 / c3, p0 / c3);
        Vec v(3);
        for (int k = 0; k < 3; ++k) v[k] = roots[k];
        std::sort(v.data(), v.data() + 3);
        return v;
    }
    throw UnsupportedError("characteristic-polynomial eigenvalues cover m <= 3");
}

namespace {

/// Wishart and inverse-Wishart manifolds in the scale parameter. Both
/// carry the Fisher matrix (n/2) D^T (Sigma^-1 kron Sigma^-1) D, hence
/// the same distance and geodesics; only the density differs.
class WishartBase : public Family {
public:
    WishartBase(std::string name, int m, double n)
        : Family(name, name + "(m=" + std::to_string(m) + ",n=" + format_dof(n) + ")"),
          m_(m), n_(n) {}

    int dim() const override { return vech_size(m_); }

    Vec normalize_coords(const Vec& coords) const override {
        if (coords.size() == vech_size(m_)) return coords;
        if (coords.size() == m_ * m_) {
            Mat A(m_, m_);
            for (int i = 0; i < m_; ++i)
                for (int j = 0; j < m_; ++j) A(i, j) = coords[i * m_ + j];
            check_symmetric(A);
            return vech(0.5 * (A + A.transpose()));
        }
        throw DomainError("expected " + std::to_string(vech_size(m_)) +
                          " vech or " + std::to_string(m_ * m_) +
                          " row-major matrix entries");
    }

    void validate(const Vec& c) const override {
        if (c.size() != vech_size(m_))
            throw DomainError("expected " + std::to_string(vech_size(m_)) +
                              " vech coordinates");
        for (int i = 0; i < c.size(); ++i)
            if (!std::isfinite(c[i])) throw DomainError("coordinates must be finite");
        Eigen::LLT<Mat> llt(unvech(c, m_));
        if (llt.info() != Eigen::Success)
            throw DomainError("sigma must be positive definite");
    }

    Mat fisher(const Vec& c) const override {
        return wishart_fisher_matrix(unvech(c, m_), n_);
    }

    double distance(const Vec& a, const Vec& b) const override {
        return wishart_distance_matrix(unvech(a, m_), unvech(b, m_), n_);
    }

    std::vector<Vec> geodesic_path(const Vec& a, const Vec& b, int steps) const override {
        const Mat s1 = unvech(a, m_);
        const Mat s2 = unvech(b, m_);
        Eigen::LLT<Mat> llt(s1);
        if (llt.info() != Eigen::Success)
            throw DomainError("sigma must be positive definite");
        const Mat L = llt.matrixL();
        Mat W = L.triangularView<Eigen::Lower>().solve(s2);
        W = L.triangularView<Eigen::Lower>().solve(W.transpose()).transpose();
        Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (W + W.transpose()));
        const Mat LQ = L * es.eigenvectors();
        std::vector<Vec> out;
        out.reserve(steps + 1);
        for (int i = 0; i <= steps; ++i) {
            const double t = static_cast<double>(i) / steps;
            Vec powed(m_);
            for (int k = 0; k < m_; ++k)
                powed[k] = std::pow(std::fmax(es.eigenvalues()[k], 1e-300), t);
            const Mat st = LQ * powed.asDiagonal() * LQ.transpose();
            out.push_back(vech(0.5 * (st + st.transpose())));
        }
        return out;
    }

    Vec sample_point(std::mt19937_64& rng) const override {
        std::uniform_real_distribution<double> logeig(std::log(0.1), std::log(10.0));
        std::normal_distribution<double> gauss(0.0, 1.0);
        Vec lam(m_);
        for (int i = 0; i < m_; ++i) lam[i] = std::exp(logeig(rng));
        Mat G(m_, m_);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) G(i, j) = gauss(rng);
        const Mat Q = Eigen::HouseholderQR<Mat>(G).householderQ();
        const Mat S = Q * lam.asDiagonal() * Q.transpose();
        return vech(0.5 * (S + S.transpose()));
    }

protected:
    int m_;
    double n_;

private:
    static std::string format_dof(double n) {
        const long r = std::lround(n);
        if (std::fabs(n - r) < 1e-12) return std::to_string(r);
        std::ostringstream os;
        os << n;
        return os.str();
    }
};

class Wishart final : public WishartBase {
public:
    Wishart(int m, double n) : WishartBase("wishart", m, n) {}

    double log_density(const Vec& c, const Vec& x) const override {
        const Mat sigma = unvech(c, m_);
        const Mat X = unvech(x, m_);
        Eigen::LLT<Mat> lx(X);
        if (lx.info() != Eigen::Success)
            throw SupportError("sample matrix must be positive definite");
        Eigen::LLT<Mat> ls(sigma);
        const double logdet_x =
            2.0 * Mat(lx.matrixL()).diagonal().array().log().sum();
        const double logdet_s =
            2.0 * Mat(ls.matrixL()).diagonal().array().log().sum();
        const double tr = ls.solve(X).trace();
        return 0.5 * (n_ - m_ - 1.0) * logdet_x - 0.5 * tr -
               0.5 * n_ * m_ * std::log(2.0) - 0.5 * n_ * logdet_s -
               multigamma_log(0.5 * n_, m_);
    }
};

class InverseWishart final : public WishartBase {
public:
    InverseWishart(int m, double n) : WishartBase("inverse_wishart", m, n) {}

    double log_density(const Vec& c, const Vec& x) const override {
        const Mat psi = unvech(c, m_);
        const Mat X = unvech(x, m_);
        Eigen::LLT<Mat> lx(X);
        if (lx.info() != Eigen::Success)
            throw SupportError("sample matrix must be positive definite");
        Eigen::LLT<Mat> lp(psi);
        const double logdet_x =
            2.0 * Mat(lx.matrixL()).diagonal().array().log().sum();
        const double logdet_p =
            2.0 * Mat(lp.matrixL()).diagonal().array().log().sum();
        const double tr = lx.solve(psi).trace();
        return 0.5 * n_ * logdet_p - 0.5 * (n_ + m_ + 1.0) * logdet_x - 0.5 * tr -
               0.5 * n_ * m_ * std::log(2.0) - multigamma_log(0.5 * n_, m_);
    }
};

} // namespace

FamilyPtr make_wishart(int m, double n) {
    if (m < 1) throw DomainError("m must be a positive integer");
    if (!(n > m - 1)) throw DomainError("n must exceed m - 1");
    return std::make_shared<Wishart>(m, n);
}

FamilyPtr make_inverse_wishart(int m, double n) {
    if (m < 1) throw DomainError("m must be a positive integer");
    if (!(n > m - 1)) throw DomainError("n must exceed m - 1");
    return std::make_shared<InverseWishart>(m, n);
}

} // namespace raodist
