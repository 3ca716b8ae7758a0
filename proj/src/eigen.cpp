#include "symfact/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace symfact {

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) sum += a(i, j) * a(i, j);
    return std::sqrt(sum);
}

} // namespace

SymmetricEigen symmetric_eigen(const DenseMatrix& input, const Config& cfg) {
    if (!input.square()) {
        throw DimensionMismatch("symmetric_eigen needs a square matrix");
    }
    if (symmetry_defect(input) > cfg.sym_tol) {
        throw NotSymmetric("matrix is not symmetric (defect " +
                           std::to_string(symmetry_defect(input)) + ")");
    }
    const std::size_t m = input.rows();
    DenseMatrix a = input;
    // symmetrize exactly so rotations preserve symmetry to the last bit
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const double v = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = v;
            a(j, i) = v;
        }
    DenseMatrix v = DenseMatrix::identity(m);
    const double norm = std::max(frobenius_norm(a), std::numeric_limits<double>::min());
    const double target = 1e-14 * norm;

    int sweep = 0;
    while (off_diagonal_norm(a) > target) {
        if (++sweep > cfg.max_sweeps) {
            throw ConvergenceFailure("Jacobi did not converge after " +
                                     std::to_string(cfg.max_sweeps) +
                                     " sweeps; off-diagonal residual " +
                                     std::to_string(off_diagonal_norm(a)));
        }
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double apq = a(p, q);
                if (std::fabs(apq) <= 1e-18 * norm) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // A <- G^T A G with G the (p,q) rotation
                for (std::size_t k = 0; k < m; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    SymmetricEigen out;
    out.values.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.values[i] = a(i, i);

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return out.values[x] > out.values[y]; });
    SymmetricEigen sorted;
    sorted.values.resize(m);
    sorted.vectors = DenseMatrix(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        sorted.values[j] = out.values[order[j]];
        for (std::size_t i = 0; i < m; ++i) sorted.vectors(i, j) = v(i, order[j]);
    }
    return sorted;
}

Inertia inertia(const DenseMatrix& a, const Config& cfg) {
    const SymmetricEigen eig = symmetric_eigen(a, cfg);
    const double cut = cfg.zero_tol * frobenius_norm(a);
    Inertia out;
    for (double lambda : eig.values) {
        if (lambda > cut)
            ++out.p;
        else if (lambda < -cut)
            ++out.n;
        else
            ++out.z;
    }
    return out;
}

namespace {

//  orthes/hqr2 below are adapted from the Algol procedures of Martin and
//  Wilkinson (Handbook for Automatic Computation, vol. II) via the EISPACK
//  and JAMA translations, in double precision with a hard iteration cap.

void orthes(DenseMatrix& h, DenseMatrix& v) {
    const int n = static_cast<int>(h.rows());
    const int low = 0;
    const int high = n - 1;
    std::vector<double> ort(n, 0.0);

    for (int m = low + 1; m <= high - 1; ++m) {
        double scale = 0.0;
        for (int i = m; i <= high; ++i) scale += std::fabs(h(i, m - 1));
        if (scale != 0.0) {
            double hh = 0.0;
            for (int i = high; i >= m; --i) {
                ort[i] = h(i, m - 1) / scale;
                hh += ort[i] * ort[i];
            }
            double g = std::sqrt(hh);
            if (ort[m] > 0) g = -g;
            hh = hh - ort[m] * g;
            ort[m] = ort[m] - g;

            for (int j = m; j < n; ++j) {
                double f = 0.0;
                for (int i = high; i >= m; --i) f += ort[i] * h(i, j);
                f /= hh;
                for (int i = m; i <= high; ++i) h(i, j) -= f * ort[i];
            }
            for (int i = 0; i <= high; ++i) {
                double f = 0.0;
                for (int j = high; j >= m; --j) f += ort[j] * h(i, j);
                f /= hh;
                for (int j = m; j <= high; ++j) h(i, j) -= f * ort[j];
            }
            ort[m] = scale * ort[m];
            h(m, m - 1) = scale * g;
        }
    }

    v = DenseMatrix::identity(n);
    for (int m = high - 1; m >= low + 1; --m) {
        if (h(m, m - 1) != 0.0) {
            for (int i = m + 1; i <= high; ++i) ort[i] = h(i, m - 1);
            for (int j = m; j <= high; ++j) {
                double g = 0.0;
                for (int i = m; i <= high; ++i) g += ort[i] * v(i, j);
                g = (g / ort[m]) / h(m, m - 1);
                for (int i = m; i <= high; ++i) v(i, j) += g * ort[i];
            }
        }
    }
}

struct Cdiv {
    double r, i;
};

Cdiv cdiv(double xr, double xi, double yr, double yi) {
    if (std::fabs(yr) > std::fabs(yi)) {
        const double r = yi / yr;
        const double d = yr + r * yi;
        return {(xr + r * xi) / d, (xi - r * xr) / d};
    }
    const double r = yr / yi;
    const double d = yi + r * yr;
    return {(r * xr + xi) / d, (r * xi - xr) / d};
}

void hqr2(DenseMatrix& h, DenseMatrix& v, std::vector<double>& d, std::vector<double>& e) {
    const int nn = static_cast<int>(h.rows());
    int n = nn - 1;
    const int low = 0;
    const int high = nn - 1;
    const double eps = std::pow(2.0, -52.0);
    double exshift = 0.0;
    double p = 0, q = 0, r = 0, s = 0, z = 0, t, w, x, y;

    d.assign(nn, 0.0);
    e.assign(nn, 0.0);

    double norm = 0.0;
    for (int i = 0; i < nn; ++i) {
        for (int j = std::max(i - 1, 0); j < nn; ++j) norm += std::fabs(h(i, j));
    }

    int iter = 0;
    int total_iter = 0;
    const int iter_cap = 60 * std::max(nn, 1);
    while (n >= low) {
        if (++total_iter > iter_cap) {
            throw ConvergenceFailure("QR iteration exceeded " + std::to_string(iter_cap) +
                                     " steps");
        }

        int l = n;
        while (l > low) {
            s = std::fabs(h(l - 1, l - 1)) + std::fabs(h(l, l));
            if (s == 0.0) s = norm;
            if (std::fabs(h(l, l - 1)) < eps * s) break;
            --l;
        }

        if (l == n) {
            // one root found
            h(n, n) += exshift;
            d[n] = h(n, n);
            e[n] = 0.0;
            --n;
            iter = 0;
        } else if (l == n - 1) {
            // two roots found
            w = h(n, n - 1) * h(n - 1, n);
            p = (h(n - 1, n - 1) - h(n, n)) / 2.0;
            q = p * p + w;
            z = std::sqrt(std::fabs(q));
            h(n, n) += exshift;
            h(n - 1, n - 1) += exshift;
            x = h(n, n);

            if (q >= 0) {
                // real pair
                z = (p >= 0) ? p + z : p - z;
                d[n - 1] = x + z;
                d[n] = d[n - 1];
                if (z != 0.0) d[n] = x - w / z;
                e[n - 1] = 0.0;
                e[n] = 0.0;
                x = h(n, n - 1);
                s = std::fabs(x) + std::fabs(z);
                p = x / s;
                q = z / s;
                r = std::sqrt(p * p + q * q);
                p /= r;
                q /= r;
                for (int j = n - 1; j < nn; ++j) {
                    z = h(n - 1, j);
                    h(n - 1, j) = q * z + p * h(n, j);
                    h(n, j) = q * h(n, j) - p * z;
                }
                for (int i = 0; i <= n; ++i) {
                    z = h(i, n - 1);
                    h(i, n - 1) = q * z + p * h(i, n);
                    h(i, n) = q * h(i, n) - p * z;
                }
                for (int i = low; i <= high; ++i) {
                    z = v(i, n - 1);
                    v(i, n - 1) = q * z + p * v(i, n);
                    v(i, n) = q * v(i, n) - p * z;
                }
            } else {
                // complex pair
                d[n - 1] = x + p;
                d[n] = x + p;
                e[n - 1] = z;
                e[n] = -z;
            }
            n -= 2;
            iter = 0;
        } else {
            // form shift
            x = h(n, n);
            y = 0.0;
            w = 0.0;
            if (l < n) {
                y = h(n - 1, n - 1);
                w = h(n, n - 1) * h(n - 1, n);
            }

            if (iter == 10) {
                // Wilkinson's ad hoc shift
                exshift += x;
                for (int i = low; i <= n; ++i) h(i, i) -= x;
                s = std::fabs(h(n, n - 1)) + std::fabs(h(n - 1, n - 2));
                x = y = 0.75 * s;
                w = -0.4375 * s * s;
            }
            if (iter == 30) {
                s = (y - x) / 2.0;
                s = s * s + w;
                if (s > 0) {
                    s = std::sqrt(s);
                    if (y < x) s = -s;
                    s = x - w / ((y - x) / 2.0 + s);
                    for (int i = low; i <= n; ++i) h(i, i) -= s;
                    exshift += s;
                    x = y = w = 0.964;
                }
            }
            ++iter;

            // two consecutive small sub-diagonal elements
            int m = n - 2;
            while (m >= l) {
                z = h(m, m);
                r = x - z;
                s = y - z;
                p = (r * s - w) / h(m + 1, m) + h(m, m + 1);
                q = h(m + 1, m + 1) - z - r - s;
                r = h(m + 2, m + 1);
                s = std::fabs(p) + std::fabs(q) + std::fabs(r);
                p /= s;
                q /= s;
                r /= s;
                if (m == l) break;
                if (std::fabs(h(m, m - 1)) * (std::fabs(q) + std::fabs(r)) <
                    eps * (std::fabs(p) * (std::fabs(h(m - 1, m - 1)) + std::fabs(z) +
                                           std::fabs(h(m + 1, m + 1))))) {
                    break;
                }
                --m;
            }
            for (int i = m + 2; i <= n; ++i) {
                h(i, i - 2) = 0.0;
                if (i > m + 2) h(i, i - 3) = 0.0;
            }

            // double QR step on rows l..n, columns m..n
            for (int k = m; k <= n - 1; ++k) {
                const bool notlast = (k != n - 1);
                if (k != m) {
                    p = h(k, k - 1);
                    q = h(k + 1, k - 1);
                    r = notlast ? h(k + 2, k - 1) : 0.0;
                    x = std::fabs(p) + std::fabs(q) + std::fabs(r);
                    if (x != 0.0) {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                if (x == 0.0) break;
                s = std::sqrt(p * p + q * q + r * r);
                if (p < 0) s = -s;
                if (s != 0) {
                    if (k != m) {
                        h(k, k - 1) = -s * x;
                    } else if (l != m) {
                        h(k, k - 1) = -h(k, k - 1);
                    }
                    p += s;
                    x = p / s;
                    y = q / s;
                    z = r / s;
                    q /= p;
                    r /= p;

                    for (int j = k; j < nn; ++j) {
                        p = h(k, j) + q * h(k + 1, j);
                        if (notlast) {
                            p += r * h(k + 2, j);
                            h(k + 2, j) -= p * z;
                        }
                        h(k, j) -= p * x;
                        h(k + 1, j) -= p * y;
                    }
                    for (int i = 0; i <= std::min(n, k + 3); ++i) {
                        p = x * h(i, k) + y * h(i, k + 1);
                        if (notlast) {
                            p += z * h(i, k + 2);
                            h(i, k + 2) -= p * r;
                        }
                        h(i, k) -= p;
                        h(i, k + 1) -= p * q;
                    }
                    for (int i = low; i <= high; ++i) {
                        p = x * v(i, k) + y * v(i, k + 1);
                        if (notlast) {
                            p += z * v(i, k + 2);
                            v(i, k + 2) -= p * r;
                        }
                        v(i, k) -= p;
                        v(i, k + 1) -= p * q;
                    }
                }
            }
        }
    }

    // backsubstitute to find vectors of the upper triangular form
    if (norm == 0.0) return;

    for (n = nn - 1; n >= 0; --n) {
        p = d[n];
        q = e[n];

        if (q == 0) {
            // real vector
            int l = n;
            h(n, n) = 1.0;
            for (int i = n - 1; i >= 0; --i) {
                w = h(i, i) - p;
                r = 0.0;
                for (int j = l; j <= n; ++j) r += h(i, j) * h(j, n);
                if (e[i] < 0.0) {
                    z = w;
                    s = r;
                } else {
                    l = i;
                    if (e[i] == 0.0) {
                        h(i, n) = (w != 0.0) ? -r / w : -r / (eps * norm);
                    } else {
                        x = h(i, i + 1);
                        y = h(i + 1, i);
                        q = (d[i] - p) * (d[i] - p) + e[i] * e[i];
                        t = (x * s - z * r) / q;
                        h(i, n) = t;
                        if (std::fabs(x) > std::fabs(z)) {
                            h(i + 1, n) = (-r - w * t) / x;
                        } else {
                            h(i + 1, n) = (-s - y * t) / z;
                        }
                    }
                    t = std::fabs(h(i, n));
                    if ((eps * t) * t > 1) {
                        for (int j = i; j <= n; ++j) h(j, n) /= t;
                    }
                }
            }
        } else if (q < 0) {
            // complex vector
            int l = n - 1;
            if (std::fabs(h(n, n - 1)) > std::fabs(h(n - 1, n))) {
                h(n - 1, n - 1) = q / h(n, n - 1);
                h(n - 1, n) = -(h(n, n) - p) / h(n, n - 1);
            } else {
                const Cdiv c = cdiv(0.0, -h(n - 1, n), h(n - 1, n - 1) - p, q);
                h(n - 1, n - 1) = c.r;
                h(n - 1, n) = c.i;
            }
            h(n, n - 1) = 0.0;
            h(n, n) = 1.0;
            for (int i = n - 2; i >= 0; --i) {
                double ra = 0.0, sa = 0.0;
                for (int j = l; j <= n; ++j) {
                    ra += h(i, j) * h(j, n - 1);
                    sa += h(i, j) * h(j, n);
                }
                w = h(i, i) - p;
                if (e[i] < 0.0) {
                    z = w;
                    r = ra;
                    s = sa;
                } else {
                    l = i;
                    if (e[i] == 0) {
                        const Cdiv c = cdiv(-ra, -sa, w, q);
                        h(i, n - 1) = c.r;
                        h(i, n) = c.i;
                    } else {
                        x = h(i, i + 1);
                        y = h(i + 1, i);
                        double vr = (d[i] - p) * (d[i] - p) + e[i] * e[i] - q * q;
                        double vi = (d[i] - p) * 2.0 * q;
                        if (vr == 0.0 && vi == 0.0) {
                            vr = eps * norm *
                                 (std::fabs(w) + std::fabs(q) + std::fabs(x) + std::fabs(y) +
                                  std::fabs(z));
                        }
                        Cdiv c = cdiv(x * r - z * ra + q * sa, x * s - z * sa - q * ra, vr, vi);
                        h(i, n - 1) = c.r;
                        h(i, n) = c.i;
                        if (std::fabs(x) > (std::fabs(z) + std::fabs(q))) {
                            h(i + 1, n - 1) = (-ra - w * h(i, n - 1) + q * h(i, n)) / x;
                            h(i + 1, n) = (-sa - w * h(i, n) - q * h(i, n - 1)) / x;
                        } else {
                            c = cdiv(-r - y * h(i, n - 1), -s - y * h(i, n), z, q);
                            h(i + 1, n - 1) = c.r;
                            h(i + 1, n) = c.i;
                        }
                    }
                    t = std::max(std::fabs(h(i, n - 1)), std::fabs(h(i, n)));
                    if ((eps * t) * t > 1) {
                        for (int j = i; j <= n; ++j) {
                            h(j, n - 1) /= t;
                            h(j, n) /= t;
                        }
                    }
                }
            }
        }
    }

    // back transformation to eigenvectors of the original matrix
    for (int j = nn - 1; j >= low; --j) {
        for (int i = low; i <= high; ++i) {
            z = 0.0;
            for (int k = low; k <= std::min(j, high); ++k) z += v(i, k) * h(k, j);
            v(i, j) = z;
        }
    }
}

} // namespace

GeneralEigen general_eigen(const DenseMatrix& a, const Config& cfg) {
    if (!a.square()) {
        throw DimensionMismatch("general_eigen needs a square matrix");
    }
    const int m = static_cast<int>(a.rows());
    if (m > cfg.size_cap) {
        throw CapExceeded("dimension " + std::to_string(m) + " exceeds cap " +
                          std::to_string(cfg.size_cap));
    }
    GeneralEigen out;
    if (m == 0) {
        out.vectors = DenseMatrix(0, 0);
        return out;
    }
    DenseMatrix h = a;
    DenseMatrix v;
    orthes(h, v);
    hqr2(h, v, out.wr, out.wi);
    out.vectors = std::move(v);
    return out;
}

EigenvalueSet general_eigenvalues(const DenseMatrix& a, const Config& cfg) {
    const GeneralEigen raw = general_eigen(a, cfg);
    EigenvalueSet out;
    const std::size_t m = raw.wr.size();
    std::size_t negative_im = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double re = raw.wr[i];
        const double im = raw.wi[i];
        const double mag = std::hypot(re, im);
        if (std::fabs(im) <= cfg.pair_tol * (1.0 + mag)) {
            out.real_eigenvalues.push_back(re);
        } else if (im > 0) {
            out.complex_pairs.emplace_back(re, im);
        } else {
            ++negative_im;
        }
    }
    if (negative_im != out.complex_pairs.size()) {
        throw ConvergenceFailure("unpaired complex eigenvalues after real coercion");
    }
    std::sort(out.real_eigenvalues.begin(), out.real_eigenvalues.end(), std::greater<>());
    std::sort(out.complex_pairs.begin(), out.complex_pairs.end(),
              [](const auto& x, const auto& y) {
                  if (x.first != y.first) return x.first > y.first;
                  return x.second < y.second;
              });
    return out;
}

DenseMatrix spd_sqrt(const DenseMatrix& a, const Config& cfg) {
    const SymmetricEigen eig = symmetric_eigen(a, cfg);
    const double norm = frobenius_norm(a);
    DenseMatrix root(a.rows(), a.cols());
    for (std::size_t k = 0; k < eig.values.size(); ++k) {
        if (eig.values[k] <= cfg.zero_tol * norm) {
            throw NotSPD("matrix has a non-positive eigenvalue " +
                         std::to_string(eig.values[k]));
        }
        const double s = std::sqrt(eig.values[k]);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                root(i, j) += s * eig.vectors(i, k) * eig.vectors(j, k);
    }
    return root;
}

} // namespace symfact
