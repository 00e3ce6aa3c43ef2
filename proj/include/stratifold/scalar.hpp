/**
 * Exact integer scalar types usable as Eigen matrix coefficients.
 *
 * Two backends are provided:
 *  - BigInt: arbitrary precision (boost::multiprecision::cpp_int), the
 *    default for anything that is returned to callers.
 *  - CheckedInt: a 64-bit integer whose arithmetic throws OverflowError
 *    instead of wrapping. Used as a fast path; callers retry with BigInt
 *    when it throws.
 */
#ifndef STRATIFOLD_SCALAR_HPP
#define STRATIFOLD_SCALAR_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

// Eigen 3.4 matrices expose `const_iterator = void`, which trips the
// byte-container detection of Boost.Multiprecision when a number is
// combined with an Eigen expression. Matrices are never byte containers.
namespace boost::multiprecision::detail {
template <class C>
    requires std::is_void_v<typename C::const_iterator>
struct is_byte_container_imp<C, true> : boost::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>

namespace stratifold {

using BigInt = boost::multiprecision::cpp_int;

class OverflowError : public std::overflow_error
{
  public:
    using std::overflow_error::overflow_error;
};

/**
 * 64-bit signed integer with overflow-checked arithmetic.
 */
class CheckedInt
{
  public:
    constexpr CheckedInt() = default;
    constexpr CheckedInt(std::int64_t v) : value_(v) {}  // NOLINT: implicit by design of Eigen literals
    constexpr CheckedInt(int v) : value_(v) {}           // NOLINT

    constexpr std::int64_t value() const { return value_; }

    friend CheckedInt operator+(CheckedInt a, CheckedInt b)
    {
        std::int64_t r;
        if (__builtin_add_overflow(a.value_, b.value_, &r))
            throw OverflowError("CheckedInt: addition overflow");
        return r;
    }
    friend CheckedInt operator-(CheckedInt a, CheckedInt b)
    {
        std::int64_t r;
        if (__builtin_sub_overflow(a.value_, b.value_, &r))
            throw OverflowError("CheckedInt: subtraction overflow");
        return r;
    }
    friend CheckedInt operator*(CheckedInt a, CheckedInt b)
    {
        std::int64_t r;
        if (__builtin_mul_overflow(a.value_, b.value_, &r))
            throw OverflowError("CheckedInt: multiplication overflow");
        return r;
    }
    friend CheckedInt operator/(CheckedInt a, CheckedInt b)
    {
        if (b.value_ == 0)
            throw std::domain_error("CheckedInt: division by zero");
        if (a.value_ == INT64_MIN && b.value_ == -1)
            throw OverflowError("CheckedInt: division overflow");
        return a.value_ / b.value_;
    }
    friend CheckedInt operator%(CheckedInt a, CheckedInt b)
    {
        if (b.value_ == 0)
            throw std::domain_error("CheckedInt: division by zero");
        if (b.value_ == -1)
            return 0;
        return a.value_ % b.value_;
    }
    CheckedInt operator-() const
    {
        if (value_ == INT64_MIN)
            throw OverflowError("CheckedInt: negation overflow");
        return -value_;
    }
    CheckedInt operator+() const { return *this; }
    CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
    CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
    CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }
    CheckedInt& operator/=(CheckedInt o) { return *this = *this / o; }

    friend constexpr auto operator<=>(CheckedInt, CheckedInt) = default;
    friend constexpr bool operator==(CheckedInt, CheckedInt) = default;

    friend std::ostream& operator<<(std::ostream& os, CheckedInt v) { return os << v.value_; }

  private:
    std::int64_t value_ = 0;
};

inline CheckedInt abs(CheckedInt v) { return v < CheckedInt(0) ? -v : v; }

/// Conversion helpers shared by the templated algorithms.
template <typename Scalar>
Scalar scalar_from(const BigInt& v);

template <>
inline BigInt scalar_from<BigInt>(const BigInt& v)
{
    return v;
}

template <>
inline CheckedInt scalar_from<CheckedInt>(const BigInt& v)
{
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN))
        throw OverflowError("value does not fit in 64 bits");
    return CheckedInt(static_cast<std::int64_t>(v));
}

inline BigInt to_big(const BigInt& v) { return v; }
inline BigInt to_big(CheckedInt v) { return BigInt(v.value()); }

}  // namespace stratifold

namespace Eigen {
template <>
struct NumTraits<stratifold::CheckedInt> : GenericNumTraits<stratifold::CheckedInt>
{
    typedef stratifold::CheckedInt Real;
    typedef stratifold::CheckedInt NonInteger;
    typedef stratifold::CheckedInt Nested;
    enum
    {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 3
    };
    static inline int digits10() { return 18; }
    static inline stratifold::CheckedInt epsilon() { return 0; }
    static inline stratifold::CheckedInt dummy_precision() { return 0; }
    static inline stratifold::CheckedInt highest() { return INT64_MAX; }
    static inline stratifold::CheckedInt lowest() { return INT64_MIN; }
};
}  // namespace Eigen

#endif
