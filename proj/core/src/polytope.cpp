// SPDX-License-Identifier: Apache-2.0
#include "polycert/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace polycert {

HPoly::HPoly(Eigen::MatrixXd a_, Eigen::VectorXd b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.rows() != b.size())
        throw ShapeError("HPoly: " + std::to_string(a.rows()) + " normal rows vs " +
                         std::to_string(b.size()) + " offsets");
}

HPoly HPoly::normalized(const Tolerances& tol) const {
    std::vector<Eigen::Index> keep;
    keep.reserve(rows());
    for (Eigen::Index i = 0; i < rows(); ++i) {
        const double n = a.row(i).norm();
        if (n > tol.zero) {
            keep.push_back(i);
        } else if (b(i) > tol.feas) {
            throw Error("HPoly row " + std::to_string(i) + " is 0 >= " + std::to_string(b(i)));
        }
        // zero row with b <= tol: vacuous, dropped
    }
    HPoly out;
    out.a.resize(static_cast<Eigen::Index>(keep.size()), dim());
    out.b.resize(static_cast<Eigen::Index>(keep.size()));
    for (size_t k = 0; k < keep.size(); ++k) {
        const double n = a.row(keep[k]).norm();
        out.a.row(static_cast<Eigen::Index>(k)) = a.row(keep[k]) / n;
        out.b(static_cast<Eigen::Index>(k)) = b(keep[k]) / n;
    }
    return out;
}

bool HPoly::contains(const Eigen::VectorXd& x, double eps) const {
    if (rows() == 0) return true;
    return ((a * x - b).array() >= -eps).all();
}

HPoly HPoly::vstack(const HPoly& p, const HPoly& q) {
    if (p.rows() == 0) return q;
    if (q.rows() == 0) return p;
    if (p.dim() != q.dim()) throw ShapeError("vstack: dimension mismatch");
    HPoly out;
    out.a.resize(p.rows() + q.rows(), p.dim());
    out.a << p.a, q.a;
    out.b.resize(p.rows() + q.rows());
    out.b << p.b, q.b;
    return out;
}

VPoly::VPoly(Eigen::MatrixXd v) : vertices(std::move(v)) {
    if (!vertices.allFinite()) throw Error("VPoly: non-finite coordinate");
}

namespace {

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<double> parse_numbers(const std::string& text, int lineno) {
    std::istringstream ss(text);
    std::vector<double> out;
    std::string tok;
    while (ss >> tok) {
        try {
            size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": bad number '" + tok + "'");
        }
    }
    return out;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

HPoly read_hpoly(std::istream& in) {
    std::vector<std::vector<double>> coeffs;
    std::vector<double> offsets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        const auto ge = body.find(">=");
        if (ge == std::string::npos) {
            if (parse_numbers(body, lineno).empty()) continue;  // blank line
            throw ParseError("line " + std::to_string(lineno) + ": missing '>='");
        }
        auto lhs = parse_numbers(body.substr(0, ge), lineno);
        auto rhs = parse_numbers(body.substr(ge + 2), lineno);
        if (lhs.empty() || rhs.size() != 1)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'c1 .. cd >= b'");
        if (!coeffs.empty() && coeffs.front().size() != lhs.size())
            throw ParseError("line " + std::to_string(lineno) + ": inconsistent dimension");
        coeffs.push_back(std::move(lhs));
        offsets.push_back(rhs[0]);
    }
    if (coeffs.empty()) throw ParseError("no constraints found");
    HPoly p;
    p.a.resize(static_cast<Eigen::Index>(coeffs.size()), static_cast<Eigen::Index>(coeffs.front().size()));
    p.b.resize(static_cast<Eigen::Index>(offsets.size()));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        for (size_t j = 0; j < coeffs[i].size(); ++j)
            p.a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = coeffs[i][j];
        p.b(static_cast<Eigen::Index>(i)) = offsets[i];
    }
    return p;
}

HPoly load_hpoly(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    return read_hpoly(f);
}

void write_hpoly(std::ostream& out, const HPoly& p) {
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        for (Eigen::Index j = 0; j < p.dim(); ++j) {
            if (j) out << ' ';
            out << fmt17(p.a(i, j));
        }
        out << " >= " << fmt17(p.b(i)) << '\n';
    }
}

void save_hpoly(const std::string& path, const HPoly& p) {
    std::ofstream f(path);
    if (!f) throw Error("cannot write '" + path + "'");
    write_hpoly(f, p);
}

VPoly read_vpoly(std::istream& in, Eigen::Index dim) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto nums = parse_numbers(strip_comment(line), lineno);
        if (nums.empty()) continue;
        if (!rows.empty() && rows.front().size() != nums.size())
            throw ParseError("line " + std::to_string(lineno) + ": inconsistent dimension");
        rows.push_back(std::move(nums));
    }
    Eigen::Index d = rows.empty() ? std::max<Eigen::Index>(dim, 1)
                                  : static_cast<Eigen::Index>(rows.front().size());
    VPoly v;
    v.vertices.resize(static_cast<Eigen::Index>(rows.size()), d);
    for (size_t i = 0; i < rows.size(); ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            v.vertices(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<size_t>(j)];
    return v;
}

VPoly load_vpoly(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    return read_vpoly(f);
}

void write_vpoly(std::ostream& out, const VPoly& v) {
    for (Eigen::Index i = 0; i < v.count(); ++i) {
        for (Eigen::Index j = 0; j < v.dim(); ++j) {
            if (j) out << ' ';
            out << fmt17(v.vertices(i, j));
        }
        out << '\n';
    }
}

void save_vpoly(const std::string& path, const VPoly& v) {
    std::ofstream f(path);
    if (!f) throw Error("cannot write '" + path + "'");
    write_vpoly(f, v);
}

namespace {

// Advance a strictly increasing index combination; false when exhausted.
bool next_combination(std::vector<Eigen::Index>& idx, Eigen::Index m) {
    const auto k = static_cast<Eigen::Index>(idx.size());
    for (Eigen::Index i = k - 1; i >= 0; --i) {
        if (idx[static_cast<size_t>(i)] < m - (k - i)) {
            ++idx[static_cast<size_t>(i)];
            for (Eigen::Index j = i + 1; j < k; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

VPoly enumerate_vertices(const HPoly& poly, const Tolerances& tol) {
    const HPoly p = poly.normalized(tol);
    const Eigen::Index m = p.rows();
    const Eigen::Index d = p.dim();
    std::vector<Eigen::VectorXd> found;
    if (m >= d && d >= 1) {
        std::vector<Eigen::Index> idx(static_cast<size_t>(d));
        for (Eigen::Index i = 0; i < d; ++i) idx[static_cast<size_t>(i)] = i;
        Eigen::MatrixXd sub(d, d);
        Eigen::VectorXd rhs(d);
        do {
            for (Eigen::Index i = 0; i < d; ++i) {
                sub.row(i) = p.a.row(idx[static_cast<size_t>(i)]);
                rhs(i) = p.b(idx[static_cast<size_t>(i)]);
            }
            Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
            lu.setThreshold(1e-9);
            if (lu.rank() < d) continue;
            Eigen::VectorXd x = lu.solve(rhs);
            if (!x.allFinite()) continue;
            if (!p.contains(x, tol.feas * std::max(1.0, x.norm()) * 10)) continue;
            bool dup = false;
            for (const auto& v : found) {
                if ((v - x).norm() <= 1e-7 * std::max(1.0, x.norm())) {
                    dup = true;
                    break;
                }
            }
            if (!dup) found.push_back(std::move(x));
        } while (next_combination(idx, m));
    }
    std::sort(found.begin(), found.end(), [](const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
        for (Eigen::Index i = 0; i < u.size(); ++i) {
            if (u(i) < v(i) - 1e-12) return true;
            if (u(i) > v(i) + 1e-12) return false;
        }
        return false;
    });
    VPoly out;
    out.vertices.resize(static_cast<Eigen::Index>(found.size()), d);
    for (size_t i = 0; i < found.size(); ++i) out.vertices.row(static_cast<Eigen::Index>(i)) = found[i];
    return out;
}

void bounding_box(const VPoly& v, Eigen::VectorXd& lo, Eigen::VectorXd& hi) {
    if (v.count() == 0) throw EmptyInput("bounding_box: no vertices");
    lo = v.vertices.colwise().minCoeff();
    hi = v.vertices.colwise().maxCoeff();
}

}  // namespace polycert
