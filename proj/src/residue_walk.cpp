#include "lambdap/residue_walk.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lambdap/errors.hpp"
#include "lambdap/modarith.hpp"

namespace lambdap {

namespace {

void require_walk_prime(std::int64_t p, const char* who)
{
    if (p < 3 || p > kMaxWalkPrime || !is_prime(static_cast<std::uint64_t>(p))) {
        throw std::invalid_argument(std::string(who) + ": p must be an odd prime below 2^31, got " +
                                    std::to_string(p));
    }
}

void require_residue(std::int64_t i, std::int64_t p, const char* who)
{
    if (i < 1 || i > p - 2) {
        throw std::invalid_argument(std::string(who) + ": residue " + std::to_string(i) +
                                    " outside 1.." + std::to_string(p - 2));
    }
}

std::string pair_text(std::int64_t i, std::int64_t x, std::int64_t y)
{
    return "i=" + std::to_string(i) + " (x,y)=(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

} // namespace

StepBounds step_bounds(std::int64_t i, std::int64_t p)
{
    if (p < 3) throw std::invalid_argument("step_bounds: p must be at least 3");
    require_residue(i, p, "step_bounds");
    return {i, mod_inverse(i, p), mod_inverse(-(i + 1), p)};
}

MinimalPairRecord minimal_pair_direct(std::int64_t i, std::int64_t p)
{
    const StepBounds bounds = step_bounds(i, p);
    // Every solution with x + y = t has x = (i+1) t and y = -i t mod p.
    for (std::int64_t t = 2; t <= bounds.x_max + bounds.y_max; ++t) {
        const std::int64_t x = mod_floor((i + 1) * t, p);
        const std::int64_t y = mod_floor(-i * t, p);
        if (x >= 1 && y >= 1 && x + y == t && x <= bounds.x_max && y <= bounds.y_max) {
            return {i, x, y, std::nullopt};
        }
    }
    throw InternalError("minimal_pair_direct: no solution up to x_max + y_max for i=" + std::to_string(i));
}

std::vector<ClassEntry> classify_residues(std::int64_t p)
{
    if (p < 3 || p > kMaxWalkPrime) throw std::invalid_argument("classify_residues: p out of range");
    const auto n = static_cast<std::size_t>(p - 2);
    const auto root = static_cast<std::int32_t>(isqrt(static_cast<std::uint64_t>(p)));

    // Index i - 1; r == 0 marks "no witness yet".
    std::vector<ClassEntry> s_witness(n, ClassEntry{ResidueClass::S, 0, 0});
    std::vector<ClassEntry> t_witness(n, ClassEntry{ResidueClass::T, 0, 0});

    auto record = [&](std::vector<ClassEntry>& table, std::int64_t i, std::int32_t r, std::int32_t s) {
        if (i < 1 || i > p - 2) {
            throw VerificationError("classify_residues: witness (" + std::to_string(r) + "," +
                                    std::to_string(s) + ") lands on residue " + std::to_string(i));
        }
        ClassEntry& slot = table[static_cast<std::size_t>(i - 1)];
        if (slot.r != 0) {
            throw VerificationError("classify_residues: residue " + std::to_string(i) + " has two " +
                                    (slot.cls == ResidueClass::S ? "S" : "T") + " witnesses (" +
                                    std::to_string(slot.r) + "," + std::to_string(slot.s) + ") and (" +
                                    std::to_string(r) + "," + std::to_string(s) + ")");
        }
        slot.r = r;
        slot.s = s;
    };

    // root < sqrt(p) strictly because p is not a square.
    for (std::int32_t r = 1; r <= root; ++r) {
        for (std::int32_t s = 1; s <= root; ++s) {
            if (std::gcd(r, s) != 1) continue;
            record(t_witness, mod_floor(-std::int64_t{s} * mod_inverse(r + s, p), p), r, s);
            if (r != s) record(s_witness, mod_floor(std::int64_t{s} * mod_inverse(r - s, p), p), r, s);
        }
    }

    std::vector<ClassEntry> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (s_witness[k].r != 0) {
            out[k] = s_witness[k];
        } else if (t_witness[k].r != 0) {
            out[k] = t_witness[k];
        } else {
            throw VerificationError("classify_residues: residue " + std::to_string(k + 1) +
                                    " has no fraction representation mod " + std::to_string(p));
        }
    }
    return out;
}

MinimalPairRecord minimal_pair_fast(std::int64_t i, const ClassEntry& entry, std::int64_t p)
{
    require_residue(i, p, "minimal_pair_fast");
    const std::int64_t r = entry.r;
    const std::int64_t s = entry.s;
    if (r < 1 || s < 1) throw std::invalid_argument("minimal_pair_fast: empty class entry");

    std::int64_t x = 0;
    std::int64_t y = 0;
    if (entry.cls == ResidueClass::T) {
        x = r;
        y = s;
    } else {
        // s*x + r*y = p with the smaller coefficient's variable made small:
        // a is the unique value in (0, r*s) with r | a and s | (p - a) (s > r),
        // or s | a and r | (p - a) (r > s).
        if (r == s) throw InternalError("minimal_pair_fast: S witness with r == s");
        const std::int64_t big = std::max(r, s);
        const std::int64_t small = std::min(r, s);
        const std::int64_t k = mod_floor((p % big) * inverse_mod(small, big), big);
        const std::int64_t a = small * k;
        if (a <= 0 || a >= r * s || (p - a) % big != 0) {
            throw InternalError("minimal_pair_fast: no admissible a for i=" + std::to_string(i));
        }
        if (s > r) {
            x = (p - a) / s;
            y = a / r;
        } else {
            x = a / s;
            y = (p - a) / r;
        }
    }

    const StepBounds bounds = step_bounds(i, p);
    if (x < 1 || y < 1 || x > bounds.x_max || y > bounds.y_max || mod_floor(i * x + (i + 1) * y, p) != 0) {
        throw VerificationError("minimal_pair_fast: closed form violates the pair conditions at " +
                                pair_text(i, x, y) + " for p=" + std::to_string(p));
    }
    return {i, x, y, entry};
}

LambdaProfile lambda_profile(std::int64_t p)
{
    require_walk_prime(p, "lambda_profile");
    const auto n = static_cast<std::size_t>(p - 1);

    LambdaProfile prof;
    prof.p = p;
    {
        const std::vector<ClassEntry> classes = classify_residues(p);
        prof.pairs.reserve(classes.size());
        for (std::size_t k = 0; k < classes.size(); ++k) {
            prof.pairs.push_back(minimal_pair_fast(static_cast<std::int64_t>(k + 1), classes[k], p));
        }
    }

    prof.m.assign(n, 0);
    prof.m.front() = p - 1;
    prof.m.back() = p - 2;
    // m_i = p - y_{i-1} - x_i for 2 <= i <= p-2
    for (std::size_t k = 1; k + 1 < n; ++k) prof.m[k] = p - prof.pairs[k - 1].y - prof.pairs[k].x;

    prof.b.resize(n);
    prof.d.resize(n);
    prof.c_prefix.resize(n);
    std::int64_t running_b = 0;
    std::int64_t running_c = 0;
    for (std::size_t k = 0; k < n; ++k) {
        running_b += prof.m[k];
        prof.b[k] = running_b;
        prof.d[k] = p - prof.m[k];
        running_c += prof.d[k];
        prof.c_prefix[k] = running_c;
    }
    for (const auto& pair : prof.pairs) prof.c += pair.x + pair.y;

    prof.size = size_from_bead_multiplicities(BeadMultiplicities{p, prof.b});

    CheckOutcome outcome = check_identities(prof);
    outcome.merge(check_symmetry(prof));
    outcome.merge(check_pair_records(prof));
    if (!outcome.ok()) {
        throw VerificationError("lambda_profile(" + std::to_string(p) + "): " + std::to_string(outcome.violations()) +
                                " invariant violation(s), first: " + outcome.summary());
    }
    return prof;
}

CheckOutcome check_pair_records(const LambdaProfile& prof)
{
    CheckOutcome out;
    const std::int64_t p = prof.p;
    if (prof.pairs.size() != static_cast<std::size_t>(p - 2)) {
        out.fail("expected " + std::to_string(p - 2) + " minimal pairs, found " + std::to_string(prof.pairs.size()));
        return out;
    }
    for (std::size_t k = 0; k < prof.pairs.size(); ++k) {
        const auto& pr = prof.pairs[k];
        const auto i = static_cast<std::int64_t>(k + 1);
        if (pr.i != i) {
            out.fail("pair slot " + std::to_string(i) + " holds residue " + std::to_string(pr.i));
            continue;
        }
        const StepBounds bounds = step_bounds(i, p);
        if (pr.x < 1 || pr.y < 1 || pr.x > bounds.x_max || pr.y > bounds.y_max) {
            out.fail("pair out of range at " + pair_text(i, pr.x, pr.y));
        } else if (mod_floor(i * pr.x + (i + 1) * pr.y, p) != 0) {
            out.fail("pair fails the congruence at " + pair_text(i, pr.x, pr.y));
        }
    }
    return out;
}

CheckOutcome check_symmetry(const LambdaProfile& prof)
{
    CheckOutcome out;
    const std::int64_t p = prof.p;
    const auto& pairs = prof.pairs;
    for (std::int64_t i = 1; i <= p - 2; ++i) {
        const auto& a = pairs[static_cast<std::size_t>(i - 1)];
        const auto& b = pairs[static_cast<std::size_t>(p - 2 - i)];
        if (a.x != b.y || a.y != b.x) {
            out.fail("(x_i, y_i) != (y_{p-1-i}, x_{p-1-i}) at i=" + std::to_string(i));
        }
    }
    for (std::int64_t i = 2; i <= p - 2; ++i) {
        if (prof.m[static_cast<std::size_t>(i - 1)] != prof.m[static_cast<std::size_t>(p - i - 1)]) {
            out.fail("m_i != m_{p-i} at i=" + std::to_string(i));
        }
    }
    return out;
}

CheckOutcome check_identities(const LambdaProfile& prof)
{
    CheckOutcome out;
    const std::int64_t p = prof.p;
    const auto n = static_cast<std::size_t>(p - 1);
    if (prof.m.size() != n || prof.b.size() != n || prof.d.size() != n || prof.c_prefix.size() != n) {
        out.fail("sequence lengths differ from p - 1");
        return out;
    }
    if (prof.m.front() != p - 1) out.fail("m_1 != p - 1");
    if (prof.m.back() != p - 2) out.fail("m_{p-1} != p - 2");
    if (prof.d.front() != 1) out.fail("d_1 != 1");
    if (prof.d.back() != 2) out.fail("d_{p-1} != 2");

    std::int64_t running_b = 0;
    std::int64_t running_c = 0;
    __int128 sum_b = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::string at = " at i=" + std::to_string(k + 1);
        if (prof.m[k] < 0) out.fail("negative row multiplicity" + at);
        running_b += prof.m[k];
        if (prof.b[k] != running_b) out.fail("b_i != m_1 + ... + m_i" + at);
        if (prof.d[k] != p - prof.m[k]) out.fail("d_i != p - m_i" + at);
        running_c += prof.d[k];
        if (prof.c_prefix[k] != running_c) out.fail("c_i != d_1 + ... + d_i" + at);
        if (prof.b[k] != static_cast<std::int64_t>(k + 1) * p - prof.c_prefix[k]) out.fail("b_i != i p - c_i" + at);
        sum_b += prof.b[k];
    }

    std::int64_t c = 0;
    for (const auto& pr : prof.pairs) c += pr.x + pr.y;
    if (c != prof.c) out.fail("c != sum (x_i + y_i)");
    if (prof.c_prefix.back() != prof.c + 1) out.fail("c_{p-1} != c + 1");
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (prof.c_prefix[k] + prof.c_prefix[n - 2 - k] != prof.c) {
            out.fail("c_i + c_{p-1-i} != c at i=" + std::to_string(k + 1));
        }
    }
    const __int128 pp = p;
    if (2 * sum_b != pp * pp * (pp - 1) - pp * prof.c - 2) out.fail("2 sum b_i != p^2 (p-1) - p c - 2");
    return out;
}

Partition rows_to_partition(std::int64_t p, std::span<const std::int64_t> m, std::uint64_t max_parts)
{
    if (p < 2 || m.size() != static_cast<std::size_t>(p - 1)) {
        throw std::invalid_argument("rows_to_partition: need p - 1 row multiplicities");
    }
    std::uint64_t count = 0;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] < 0) throw std::invalid_argument("rows_to_partition: negative row multiplicity");
        count += static_cast<std::uint64_t>(m[k]) * static_cast<std::uint64_t>(p - 1 - static_cast<std::int64_t>(k));
        if (count > max_parts) {
            throw LimitError("rows_to_partition: more than " + std::to_string(max_parts) + " parts");
        }
    }
    std::vector<std::int64_t> parts;
    parts.reserve(count);
    std::int64_t value = 0;
    // Build in increasing order, then reverse.
    for (std::size_t k = 0; k < m.size(); ++k) {
        const auto label = static_cast<std::int64_t>(k + 1);
        for (std::int64_t row = 0; row < m[k]; ++row) {
            value += label;
            parts.insert(parts.end(), static_cast<std::size_t>(p - label), value);
        }
    }
    std::reverse(parts.begin(), parts.end());
    return Partition{std::move(parts)};
}

Partition profile_to_partition(const LambdaProfile& profile, std::uint64_t max_parts)
{
    return rows_to_partition(profile.p, profile.m, max_parts);
}

AbacusDisplay rows_to_abacus(std::int64_t p, std::span<const std::int64_t> m)
{
    if (p < 2 || m.size() != static_cast<std::size_t>(p - 1)) {
        throw std::invalid_argument("rows_to_abacus: need p - 1 row multiplicities");
    }
    std::vector<std::int64_t> beads;
    std::int64_t row = 0;
    for (std::size_t k = 0; k < m.size(); ++k) {
        const auto label = static_cast<std::int64_t>(k + 1);
        for (std::int64_t r = 0; r < m[k]; ++r, ++row) {
            for (std::int64_t runner = label; runner < p; ++runner) beads.push_back(row * p + runner);
        }
    }
    return AbacusDisplay{p, std::move(beads)};
}

WalkReport validate_walk(std::int64_t p, std::span<const std::int64_t> m)
{
    WalkReport report;
    auto violate = [&](WalkViolation::Kind kind, std::int64_t label, std::int64_t step, std::string msg) {
        report.ok = false;
        report.violation = WalkViolation{kind, label, step, std::move(msg)};
        return report;
    };
    if (p < 3 || p > kMaxWalkPrime || !is_prime(static_cast<std::uint64_t>(p))) {
        throw std::invalid_argument("validate_walk: p must be an odd prime below 2^31");
    }
    if (m.size() != static_cast<std::size_t>(p - 1)) {
        return violate(WalkViolation::Kind::BadLength, 0, 0,
                       "expected " + std::to_string(p - 1) + " label counts, got " + std::to_string(m.size()));
    }

    std::int64_t v = 0;
    for (std::size_t k = 0; k < m.size(); ++k) {
        const auto label = static_cast<std::int64_t>(k + 1);
        const std::int64_t count = m[k];
        if (count < 0 || count >= p) {
            return violate(WalkViolation::Kind::BadLength, label, 0,
                           "label " + std::to_string(label) + " count " + std::to_string(count) + " outside 0..p-1");
        }
        const std::int64_t inv = mod_inverse(label, p);
        // First step at which the block would land on 0 (p if it starts there).
        std::int64_t to_zero = mod_floor(-v * inv, p);
        if (to_zero == 0) to_zero = p;
        if (to_zero <= count) {
            return violate(WalkViolation::Kind::ReturnsToZero, label, to_zero,
                           "walk returns to 0 at step " + std::to_string(to_zero) + " of label " +
                               std::to_string(label));
        }
        if (label >= 2) {
            const std::int64_t to_top = mod_floor((p - 1 - v) * inv, p);
            if (to_top > count) {
                return violate(WalkViolation::Kind::MissedBoundary, label, 0,
                               "block of label " + std::to_string(label) + " never visits p-1");
            }
        }
        v = mod_floor(v + (count % p) * label, p);
        if (label == 1) {
            report.residue_after_first_block = v;
            if (v != p - 1) {
                return violate(WalkViolation::Kind::MissedBoundary, 1, count,
                               "label-1 block ends at " + std::to_string(v) + " instead of p-1");
            }
        }
    }
    report.final_residue = v;
    if (v != 1) {
        return violate(WalkViolation::Kind::WrongFinalResidue, p - 1, m.back(),
                       "walk ends at " + std::to_string(v) + " instead of 1");
    }
    report.ok = true;
    return report;
}

WalkReport validate_walk(const LambdaProfile& profile) { return validate_walk(profile.p, profile.m); }

std::vector<std::int64_t> walk_vertices(std::int64_t p, std::span<const std::int64_t> m, std::uint64_t max_vertices)
{
    std::uint64_t total = 1;
    for (const std::int64_t count : m) {
        if (count < 0) throw std::invalid_argument("walk_vertices: negative label count");
        total += static_cast<std::uint64_t>(count);
    }
    if (total > max_vertices) throw LimitError("walk_vertices: walk longer than the vertex cap");
    std::vector<std::int64_t> out{0};
    out.reserve(total);
    std::int64_t v = 0;
    for (std::size_t k = 0; k < m.size(); ++k) {
        for (std::int64_t step = 0; step < m[k]; ++step) {
            v = mod_floor(v + static_cast<std::int64_t>(k + 1), p);
            out.push_back(v);
        }
    }
    return out;
}

} // namespace lambdap
