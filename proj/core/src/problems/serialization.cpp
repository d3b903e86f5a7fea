#include "altmin/problems/serialization.hpp"

#include "altmin/errors.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace altmin::problems {
namespace {

void set_precision(std::ostream& os) { os << std::setprecision(17); }

double read_number(std::istream& is) {
    std::string token;
    if (!(is >> token)) raise(ErrorCode::IoError, "unexpected end of problem file");
    try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        raise(ErrorCode::IoError, "malformed number '" + token + "'");
    }
}

Eigen::Index read_size(std::istream& is) {
    long long n = 0;
    if (!(is >> n) || n < 0) raise(ErrorCode::IoError, "malformed size header");
    return static_cast<Eigen::Index>(n);
}

}  // namespace

void write_matrix(std::ostream& os, const Matrix& M) {
    set_precision(os);
    os << M.rows() << ' ' << M.cols() << '\n';
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        for (Eigen::Index j = 0; j < M.cols(); ++j) os << (j ? " " : "") << M(i, j);
        os << '\n';
    }
}

void write_vector(std::ostream& os, const Vector& v) {
    set_precision(os);
    os << v.size() << '\n';
    for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << '\n';
}

Matrix read_matrix(std::istream& is) {
    const Eigen::Index rows = read_size(is);
    const Eigen::Index cols = read_size(is);
    Matrix M(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) M(i, j) = read_number(is);
    return M;
}

Vector read_vector(std::istream& is) {
    const Eigen::Index n = read_size(is);
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = read_number(is);
    return v;
}

void write_problem(std::ostream& os, const QuadraticProblem& p) {
    os << "quadratic\n";
    write_matrix(os, p.W());
    write_vector(os, p.b());
}

void write_problem(std::ostream& os, const SplitQuadraticProblem& p) {
    os << "split_quadratic\n";
    for (const Matrix* M : {&p.A(), &p.B(), &p.C(), &p.D()}) write_matrix(os, *M);
    write_vector(os, p.c());
    write_vector(os, p.d());
}

void write_problem(std::ostream& os, const EntropicOTDual& p) {
    set_precision(os);
    os << "eot\n" << p.gamma() << '\n';
    write_matrix(os, p.cost());
    write_vector(os, p.r());
    write_vector(os, p.c());
}

AnyProblem read_problem(std::istream& is) {
    std::string family;
    if (!(is >> family)) raise(ErrorCode::IoError, "empty problem file");
    try {
        if (family == "quadratic") {
            Matrix W = read_matrix(is);
            Vector b = read_vector(is);
            return QuadraticProblem(std::move(W), std::move(b));
        }
        if (family == "split_quadratic") {
            Matrix A = read_matrix(is), B = read_matrix(is), C = read_matrix(is), D = read_matrix(is);
            Vector c = read_vector(is), d = read_vector(is);
            return SplitQuadraticProblem(std::move(A), std::move(B), std::move(C), std::move(D), std::move(c),
                                         std::move(d));
        }
        if (family == "eot") {
            const double gamma = read_number(is);
            Matrix C = read_matrix(is);
            Vector r = read_vector(is), c = read_vector(is);
            return EntropicOTDual(std::move(C), std::move(r), std::move(c), gamma);
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::IoError) throw;
        raise(ErrorCode::IoError, std::string("invalid problem data: ") + e.what());
    }
    raise(ErrorCode::IoError, "unknown problem family '" + family + "'");
}

void save_problem(const std::string& path, const AnyProblem& p) {
    std::ofstream os(path);
    if (!os) raise(ErrorCode::IoError, "cannot open " + path + " for writing");
    std::visit([&](const auto& prob) { write_problem(os, prob); }, p);
    if (!os) raise(ErrorCode::IoError, "failed writing " + path);
}

AnyProblem load_problem(const std::string& path) {
    std::ifstream is(path);
    if (!is) raise(ErrorCode::IoError, "cannot open " + path);
    return read_problem(is);
}

}  // namespace altmin::problems
