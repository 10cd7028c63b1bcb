#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "polarmult/errors.hpp"

namespace polarmult {

// Which exact coefficient field a computation runs over.
struct FieldDescriptor {
    enum class Kind { rational, prime };
    Kind kind = Kind::rational;
    std::uint64_t characteristic = 0; // set iff kind == prime

    static bool is_prime(std::uint64_t p) {
        if (p < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                return false;
        return true;
    }

    void validate() const {
        if (kind == Kind::prime) {
            if (!is_prime(characteristic))
                throw InputError("field characteristic " + std::to_string(characteristic) + " is not prime");
            if (characteristic >= (1ULL << 31))
                throw InputError("prime characteristic must fit in 31 bits");
        }
    }
};

// Exact rationals via GMP.
struct RationalField {
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
    std::string str(const Elem& a) const { return a.get_str(); }

    FieldDescriptor descriptor() const { return {FieldDescriptor::Kind::rational, 0}; }
};

// Z/p for a user-chosen prime p < 2^31. Elements stored reduced.
struct PrimeField {
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        FieldDescriptor d{FieldDescriptor::Kind::prime, p};
        d.validate();
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_int(long v) const {
        long r = v % static_cast<long>(p_);
        if (r < 0)
            r += static_cast<long>(p_);
        return static_cast<Elem>(r);
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(const Elem& a, const Elem& b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % p_; }
    Elem neg(const Elem& a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(const Elem& a) const {
        if (a == 0)
            throw Error("division by zero in prime field");
        // extended Euclid
        long long t = 0, nt = 1;
        long long r = static_cast<long long>(p_), nr = static_cast<long long>(a);
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0)
            t += static_cast<long long>(p_);
        return static_cast<Elem>(t);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    std::string str(const Elem& a) const { return std::to_string(a); }

    std::uint64_t characteristic() const { return p_; }
    FieldDescriptor descriptor() const { return {FieldDescriptor::Kind::prime, p_}; }

  private:
    std::uint64_t p_;
};

} // namespace polarmult
