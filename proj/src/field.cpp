#include "tricat/field.hpp"

namespace tricat {

namespace {

bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid; a is assumed nonzero mod p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw Error("modular inverse does not exist");
    return mod_reduce(t, p);
}

}  // namespace

Field Field::Fp(std::uint32_t p) {
    // single-word arithmetic: products of two residues must fit in int64
    if (p >= (1u << 31)) throw Error("Fp modulus must be below 2^31: " + std::to_string(p));
    if (!is_prime_u32(p)) throw Error("Fp modulus must be prime: " + std::to_string(p));
    return Field{Kind::prime, p};
}

Field Field::parse(const std::string& s) {
    if (s == "Q") return Q();
    if (s.rfind("Fp:", 0) == 0) {
        try {
            unsigned long p = std::stoul(s.substr(3));
            if (p >= (1ul << 31)) throw ParseError("prime field modulus too large: " + s);
            return Fp(static_cast<std::uint32_t>(p));
        } catch (const std::invalid_argument&) {
            throw ParseError("bad field spec: " + s);
        } catch (const std::out_of_range&) {
            throw ParseError("bad field spec: " + s);
        }
    }
    throw ParseError("bad field spec: " + s);
}

std::string Field::to_string() const {
    return kind == Kind::rationals ? "Q" : "Fp:" + std::to_string(modulus);
}

FieldElement FieldElement::zero(const Field& f) { return from_int(f, 0); }
FieldElement FieldElement::one(const Field& f) { return from_int(f, 1); }

FieldElement FieldElement::from_int(const Field& f, long v) {
    if (f.kind == Field::Kind::rationals) return FieldElement(f, mpq_class(v));
    return FieldElement(f, mod_reduce(v, f.modulus));
}

FieldElement FieldElement::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();  // lowest terms, positive denominator
    return FieldElement(Field::Q(), q);
}

FieldElement FieldElement::residue(const Field& f, long v) {
    if (f.kind != Field::Kind::prime) throw FieldMismatch("residue() needs a prime field");
    return FieldElement(f, mod_reduce(v, f.modulus));
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (field_ != o.field_)
        throw FieldMismatch("operands live in different fields: " + field_.to_string() +
                            " vs " + o.field_.to_string());
}

bool FieldElement::is_zero() const {
    return field_.kind == Field::Kind::rationals ? rat() == 0 : res() == 0;
}

bool FieldElement::is_one() const {
    return field_.kind == Field::Kind::rationals ? rat() == 1 : res() == 1;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(o);
    if (field_.kind == Field::Kind::rationals) return FieldElement(field_, mpq_class(rat() + o.rat()));
    return FieldElement(field_, mod_reduce(res() + o.res(), field_.modulus));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(o);
    if (field_.kind == Field::Kind::rationals) return FieldElement(field_, mpq_class(rat() - o.rat()));
    return FieldElement(field_, mod_reduce(res() - o.res(), field_.modulus));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(o);
    if (field_.kind == Field::Kind::rationals) return FieldElement(field_, mpq_class(rat() * o.rat()));
    return FieldElement(field_, mod_reduce(res() * o.res(), field_.modulus));
}

FieldElement FieldElement::operator-() const {
    if (field_.kind == Field::Kind::rationals) return FieldElement(field_, mpq_class(-rat()));
    return FieldElement(field_, mod_reduce(-res(), field_.modulus));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    if (field_.kind == Field::Kind::rationals)
        return FieldElement(field_, mpq_class(1 / rat()));
    return FieldElement(field_, mod_inverse(res(), field_.modulus));
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (field_ != o.field_) return false;
    return field_.kind == Field::Kind::rationals ? rat() == o.rat() : res() == o.res();
}

std::string FieldElement::to_string() const {
    if (field_.kind == Field::Kind::rationals) return rat().get_str();
    return std::to_string(res());
}

}  // namespace tricat
