#include "symcrit/linalg.hpp"

#include <numeric>
#include <sstream>

namespace symcrit {

int common_conductor(const ExactMatrix& a) {
    int n = 1;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i) n = std::lcm(n, a(i, j).conductor());
    return n;
}

ExactMatrix lift(const ExactMatrix& a, int conductor) {
    ExactMatrix out(a.rows(), a.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i) out(i, j) = a(i, j).lift(conductor);
    return out;
}

ExactMatrix unify_conductor(const ExactMatrix& a) { return lift(a, common_conductor(a)); }

ExactMatrix to_exact(const RationalMatrix& a) {
    ExactMatrix out(a.rows(), a.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i) out(i, j) = CycNum(a(i, j));
    return out;
}

ExactMatrix galois_map(const ExactMatrix& a, long k) {
    ExactMatrix out(a.rows(), a.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i) out(i, j) = a(i, j).galois(k);
    return out;
}

ExactMatrix scale(const ExactMatrix& a, const CycNum& s) {
    ExactMatrix out(a.rows(), a.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i) out(i, j) = a(i, j) * s;
    return out;
}

std::size_t ExactMatrixHash::operator()(const ExactMatrix& a) const {
    std::size_t h = static_cast<std::size_t>(a.rows() * 31 + a.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i) h = h * 1000003u ^ a(i, j).hash();
    return h;
}

namespace {

template <typename T>
std::string render(const Mat<T>& a) {
    std::ostringstream os;
    os << "[";
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (Eigen::Index j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace

std::string to_string(const ExactMatrix& a) { return render(a); }
std::string to_string(const RationalMatrix& a) { return render(a); }

}  // namespace symcrit
