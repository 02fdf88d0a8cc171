#ifndef TRICAT_FIELD_HPP
#define TRICAT_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "tricat/errors.hpp"

namespace tricat {

/*
 * Exact coefficient fields: the rationals Q with arbitrary-size integers,
 * and prime fields F_p with p < 2^31 (single-word modular arithmetic;
 * products of two residues fit in a signed 64-bit word).
 */
struct Field {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    std::uint32_t modulus = 0;  // only for Kind::prime

    static Field Q() { return Field{Kind::rationals, 0}; }
    static Field Fp(std::uint32_t p);

    // "Q" or "Fp:<p>"
    static Field parse(const std::string& s);
    std::string to_string() const;

    bool operator==(const Field& o) const {
        return kind == o.kind && modulus == o.modulus;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }
};

/// One element of a fixed exact field. Rationals are kept in lowest terms
/// with positive denominator; prime-field residues are reduced into [0, p).
class FieldElement {
public:
    FieldElement() : field_(Field::Q()), v_(mpq_class(0)) {}

    static FieldElement zero(const Field& f);
    static FieldElement one(const Field& f);
    static FieldElement from_int(const Field& f, long v);
    // Only valid for Field::Q().
    static FieldElement rational(const mpz_class& num, const mpz_class& den);
    // Only valid for prime fields.
    static FieldElement residue(const Field& f, long v);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    // Throws Error on division by zero.
    FieldElement inverse() const;
    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Rational value (Kind::rationals only).
    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    // Residue in [0, p) (Kind::prime only).
    std::int64_t res() const { return std::get<std::int64_t>(v_); }

    std::string to_string() const;

private:
    FieldElement(const Field& f, mpq_class q) : field_(f), v_(std::move(q)) {}
    FieldElement(const Field& f, std::int64_t r) : field_(f), v_(r) {}

    void check_same_field(const FieldElement& o) const;

    Field field_;
    std::variant<mpq_class, std::int64_t> v_;
};

}  // namespace tricat

#endif
