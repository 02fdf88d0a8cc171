#ifndef TRICAT_VERIFY_HPP
#define TRICAT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tricat/toolkit.hpp"

namespace tricat {

struct CheckResult {
    std::string id;
    int samples = 0;
    int failures = 0;
    std::vector<std::string> messages;  // first few failure witnesses

    bool pass() const { return failures == 0; }
    void ok() { ++samples; }
    void fail(const std::string& msg) {
        ++samples;
        ++failures;
        if (messages.size() < 4) messages.push_back(msg);
    }
    void expect(bool cond, const std::string& msg) { cond ? ok() : fail(msg); }
};

struct VerifyReport {
    std::string instance;
    std::uint64_t seed = 0;
    int samples = 0;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass()) return false;
        return true;
    }
    CheckResult& check(const std::string& id);
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int samples = 200;
    SampleBudget budget;
    bool with_hom_exactness = true;
};

/// Runs the whole axiom battery against an instance: the five defining
/// axioms sampled through the oracles, the two-sign proposition, vanishing
/// composites, rotation coherence, the cone of a suspension, direct sums
/// of triangles, filling morphisms (existence, validity, invertibility for
/// isomorphic legs), additivity laws, and hom-functor half-exactness.
VerifyReport verify_axioms(const Instance& inst, const VerifyOptions& opts);

/// A random automorphism of x (identity + random nilpotent trick, with an
/// invertibility check and bounded retries).
Mor random_automorphism(const Instance& inst, std::mt19937_64& rng, const ObjectRef& x);

}  // namespace tricat

#endif
