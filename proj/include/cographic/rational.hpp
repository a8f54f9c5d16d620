#ifndef COGRAPHIC_RATIONAL_HPP
#define COGRAPHIC_RATIONAL_HPP

#include <Eigen/Dense>
#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

// Exact scalars for the whole library: GMP integers and rationals,
// plugged into Eigen dense types. No floating point anywhere.

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpq_class NonInteger;
    typedef mpz_class Nested;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 80
    };
};

}  // namespace Eigen

namespace cographic {

using Int = mpz_class;
using Rat = mpq_class;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMat = Mat<Int>;
using IntVec = Vec<Int>;
using RatMat = Mat<Rat>;
using RatVec = Vec<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Serialized as "p" or "p/q", q > 0.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline IntVec to_int_vec(const RatVec& v) {
    IntVec w(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!is_integer(v(i))) throw std::invalid_argument("to_int_vec: non-integral entry");
        w(i) = v(i).get_num();
    }
    return w;
}

inline RatVec to_rat_vec(const IntVec& v) {
    RatVec w(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) w(i) = Rat(v(i));
    return w;
}

inline RatMat to_rat_mat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

// Smallest integer vector spanning the same ray: clear denominators, divide by
// content, keep the direction.
inline IntVec primitive_direction(const RatVec& v) {
    Int lcm = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v(i).get_den().get_mpz_t());
    IntVec w(v.size());
    Int gcd = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        w(i) = v(i).get_num() * (lcm / v(i).get_den());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), w(i).get_mpz_t());
    }
    if (gcd == 0) return w;  // zero vector
    for (Eigen::Index i = 0; i < v.size(); ++i) w(i) /= gcd;
    return w;
}

// Total order on vectors, used wherever output must be deterministic.
inline bool lex_less(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return a(i) < b(i);
    return false;
}

inline bool lex_less(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return a(i) < b(i);
    return false;
}

}  // namespace cographic

#endif
