#include "unref/bijections.hpp"

#include <algorithm>

#include "unref/enumeration.hpp"

namespace unref {

std::optional<Regime> table_regime(Part n, Part d)
{
    if ((n - d) % 2 != 0 && d >= 3 && d <= n - 7)
        return Regime::two_n_minus_4;
    if ((n - d) % 2 == 0 && d >= 4 && d <= n - 8)
        return Regime::two_n_minus_5;
    return std::nullopt;
}

Part regime_k(Regime r, Part n, Part d)
{
    const Part twice = r == Regime::two_n_minus_4 ? n - d + 1 : n - d;
    if (twice % 2 != 0)
        throw Error(Errc::regime_mismatch, "k is not integral for this (n, d)");
    return twice / 2;
}

Part StarPartition::sum() const
{
    Part s = 0;
    for (Part x : parts)
        s += x;
    return s;
}

StarPartition make_star(std::vector<Part> parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] < 1 || (i && parts[i] <= parts[i - 1]))
            throw Error(Errc::outside_star_classes, "star partition parts must be distinct, positive, ascending");
    return StarPartition{std::move(parts)};
}

const char* to_string(ClassKind k) noexcept
{
    static const char* names[] = {"A", "B", "C", "D", "E1", "E2", "E3", "E4", "F1", "F2", "F3", "F4"};
    return names[static_cast<int>(k)];
}

OddPartition make_odd_partition(std::vector<Part> parts)
{
    if (parts.size() < 2 || parts.size() % 2 != 0)
        throw Error(Errc::invalid_odd_partition, "odd partition must have even length >= 2");
    Part total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1 || parts[i] % 2 == 0)
            throw Error(Errc::invalid_odd_partition, "odd partition parts must be positive and odd");
        if (i && parts[i] <= parts[i - 1])
            throw Error(Errc::invalid_odd_partition, "odd partition parts must be strictly increasing");
        total += parts[i];
    }
    return OddPartition(std::move(parts), total);
}

namespace {

Partition head_plus(Part n, Part last)
{
    std::vector<Part> parts;
    for (Part x = 1; x <= n - 2; ++x)
        parts.push_back(x);
    parts.push_back(last);
    return make_partition(std::move(parts));
}

Regime regime_of_last(const FormContext& ctx)
{
    if (ctx.last_part == 2 * ctx.n - 4)
        return Regime::two_n_minus_4;
    if (ctx.last_part == 2 * ctx.n - 5)
        return Regime::two_n_minus_5;
    throw Error(Errc::malformed_form, "largest part must be 2n-4 or 2n-5");
}

void check_context(const FormContext& ctx)
{
    if (ctx.n < 11 || ctx.d < 1 || ctx.d > ctx.n - 1)
        throw Error(Errc::malformed_form, "form context needs n >= 11 and 1 <= d <= n-1");
    if (predicted_max_last_part(ctx.n, ctx.d) != ctx.last_part)
        throw Error(Errc::malformed_form, "largest part does not match the maximum for (n, d)");
    regime_of_last(ctx);
}

} // namespace

Partition exceptional_pi(Part n)
{
    return head_plus(n, 2 * n - 4);
}

Partition exceptional_tau(Part n)
{
    return head_plus(n, 2 * n - 5);
}

ReducedForm reduce_form(const Partition& p, Part n)
{
    if (n < 11)
        throw Error(Errc::out_of_range, "reduced forms assume n >= 11");
    const Part d = triangular_number(n) - p.total();
    if (d < 1 || d > n - 1)
        throw Error(Errc::out_of_range, "total is not T_{n,d} for this n");
    const Part last = predicted_max_last_part(n, d);
    if (p.last_part() != last || (last != 2 * n - 4 && last != 2 * n - 5) || !is_unrefinable(p))
        throw Error(Errc::not_maximal, to_string(p) + " is not a maximal partition in a table regime");
    ReducedForm form{{}, {n, d, last}};
    for (Part x : missing_parts(p).values)
        if (x <= n - 3)
            form.values.push_back(x);
    return form;
}

Partition expand_form(const ReducedForm& eta)
{
    const FormContext& ctx = eta.context;
    check_context(ctx);
    const Regime regime = regime_of_last(ctx);
    const Part n = ctx.n, d = ctx.d, last = ctx.last_part;

    if (eta.values.empty()) {
        if (regime == Regime::two_n_minus_4 && d == 3)
            return exceptional_pi(n);
        if (regime == Regime::two_n_minus_5 && d == 4)
            return exceptional_tau(n);
        throw Error(Errc::malformed_form, "the empty form only exists for d = 3 or d = 4");
    }

    const Part first_top = last - n - 1;
    std::vector<Part> firsts, middle;
    for (Part x : eta.values)
        (x <= first_top ? firsts : middle).push_back(x);

    const Source table = regime == Regime::two_n_minus_4 ? Source::rows_2n4 : Source::rows_2n5;
    std::vector<Partition> matches;
    for (const FamilyRow& row : family_rows(table)) {
        std::vector<Part> free;
        for (Part off : row.free_offsets)
            free.push_back(n + off);
        // the visible part of the free triple is whatever is <= n-3
        std::vector<Part> visible;
        for (Part x : free)
            if (x <= n - 3)
                visible.push_back(x);
        if (visible != middle)
            continue;

        DeltaRecord delta;
        delta.removed = firsts;
        delta.removed.insert(delta.removed.end(), free.begin(), free.end());
        delta.added = {d, last};
        for (Part a : firsts)
            delta.added.push_back(last - a);
        std::sort(delta.removed.begin(), delta.removed.end());
        std::sort(delta.added.begin(), delta.added.end());

        try {
            Partition p = apply_delta(canonical_pi(n, d), delta);
            if (p.last_part() == last && is_unrefinable(p) && reduce_form(p, n) == eta)
                matches.push_back(std::move(p));
        } catch (const Error&) {
            // this pattern is inconsistent with eta; try the next one
        }
    }
    if (matches.empty())
        throw Error(Errc::malformed_form, "no free-area pattern reconstructs this form");
    if (matches.size() > 1)
        throw Error(Errc::construction_mismatch, "reduced form reconstructs ambiguously");
    return std::move(matches.front());
}

std::vector<Part> complement_reverse(std::span<const Part> values, Part n)
{
    std::vector<Part> out;
    out.reserve(values.size());
    for (auto it = values.rbegin(); it != values.rend(); ++it)
        out.push_back(n - 2 - *it);
    return out;
}

StarPartition phi(const ReducedForm& eta)
{
    for (Part x : eta.values)
        if (x < 1 || x > eta.context.n - 3)
            throw Error(Errc::malformed_form, "reduced form values must lie in [1, n-3]");
    return make_star(complement_reverse(eta.values, eta.context.n));
}

ClassTag classify_2n4(const StarPartition& rho)
{
    const auto& r = rho.parts;
    const Part s = static_cast<Part>(r.size());
    if (r.empty())
        throw Error(Errc::outside_star_classes, "classify_2n4 needs a nonempty list");
    if (r[0] >= 3)
        return {ClassKind::A, s + 3};
    if (r[0] == 2)
        return {ClassKind::C, s + 2};
    if (s < 2)
        throw Error(Errc::outside_star_classes, "(1) lies in no starred class");
    if (r[1] == 2)
        return {ClassKind::D, s + 1};
    return {ClassKind::B, s + 2};
}

ClassTag classify_2n5(const StarPartition& rho)
{
    const auto& r = rho.parts;
    const Part s = static_cast<Part>(r.size());
    auto at = [&](std::size_t i) -> Part { return i < r.size() ? r[i] : 0; };
    if (r.empty())
        throw Error(Errc::outside_star_classes, "classify_2n5 needs a nonempty list");

    ClassKind kind;
    if (r[0] >= 4) {
        kind = ClassKind::E1;
    } else if (s < 2) {
        throw Error(Errc::outside_star_classes, "a single part below 4 lies in no starred class");
    } else if (at(1) >= 4) {
        kind = r[0] == 1 ? ClassKind::F1 : r[0] == 2 ? ClassKind::F2 : ClassKind::F3;
    } else if (r[0] == 1 && r[1] == 2) {
        if (s >= 3 && r[2] == 3)
            kind = ClassKind::F4;
        else
            kind = ClassKind::E2;  // rho_3 >= 4 or absent
    } else if (r[0] == 1 && r[1] == 3) {
        kind = ClassKind::E3;
    } else if (r[0] == 2 && r[1] == 3) {
        kind = ClassKind::E4;
    } else {
        // (3, 3) cannot happen for distinct parts
        throw Error(Errc::outside_star_classes, "unclassifiable star partition");
    }

    switch (kind) {
    case ClassKind::E1: return {kind, s + 3};
    case ClassKind::E2:
    case ClassKind::E3:
    case ClassKind::E4: return {kind, s + 1};
    case ClassKind::F4: return {kind, s};
    default: return {kind, s + 2};
    }
}

Part star_sum_2n5(const ClassTag& tag, Part k)
{
    switch (tag.kind) {
    case ClassKind::E1: return k + (tag.h - 1) / 2;
    case ClassKind::E2:
    case ClassKind::E3:
    case ClassKind::E4: return k + (tag.h + 1) / 2;
    case ClassKind::F1:
    case ClassKind::F2:
    case ClassKind::F3: return k + tag.h / 2;
    case ClassKind::F4: return k + 1 + tag.h / 2;
    default: throw Error(Errc::outside_star_classes, "not a 2n-5 class");
    }
}

ReducedForm phi_inv(const StarPartition& rho, const FormContext& ctx)
{
    check_context(ctx);
    const Regime regime = regime_of_last(ctx);
    const Part k = regime_k(regime, ctx.n, ctx.d);
    auto reject = [](const std::string& why) { return Error(Errc::outside_star_classes, why); };

    for (std::size_t i = 0; i < rho.parts.size(); ++i)
        if (rho.parts[i] < 1 || rho.parts[i] > ctx.n - 3 || (i && rho.parts[i] <= rho.parts[i - 1]))
            throw reject("star partition parts must be distinct and lie in [1, n-3]");

    if (rho.empty()) {
        const bool ok = (regime == Regime::two_n_minus_4 && ctx.d == 3) ||
                        (regime == Regime::two_n_minus_5 && ctx.d == 4);
        if (!ok)
            throw reject("() only stands for pi (d = 3) or tau (d = 4)");
        return ReducedForm{{}, ctx};
    }

    if (regime == Regime::two_n_minus_4) {
        if (rho.sum() != k)
            throw reject("star partition must sum to k");
        // (k) is the trivial form; for d = 3 it is replaced by pi
        if (rho.single_part() && ctx.d == 3)
            throw reject("(k) is not a reduced form when d = 3");
        if (!rho.single_part())
            classify_2n4(rho);
    } else {
        const ClassTag tag = classify_2n5(rho);
        const bool e_class = tag.kind == ClassKind::E1 || tag.kind == ClassKind::E2 ||
                             tag.kind == ClassKind::E3 || tag.kind == ClassKind::E4;
        if (e_class ? (tag.h < 5 || tag.h % 2 == 0) : (tag.h < 4 || tag.h % 2 != 0))
            throw reject("class and h parity do not match");
        if (rho.sum() != star_sum_2n5(tag, k))
            throw reject("star partition has the wrong sum for its class");
        if (ctx.d == 4 && tag.kind == ClassKind::F1 && tag.h == 4)
            throw reject("F1 with h = 4 is replaced by tau when d = 4");
    }
    return ReducedForm{complement_reverse(rho.parts, ctx.n), ctx};
}

OddPartition psi(const Partition& lambda)
{
    std::vector<Part> out;
    for (Part x : lambda.parts())
        out.push_back(2 * x - 1);
    return make_odd_partition(std::move(out));
}

Partition psi_inv(const OddPartition& sigma)
{
    std::vector<Part> out;
    for (Part x : sigma.parts())
        out.push_back((x + 1) / 2);
    return make_partition(std::move(out));
}

PartitionSet generate_via_bijection(Part n, Part d)
{
    if (n < 11)
        throw Error(Errc::out_of_range, "bijections assume n >= 11");
    const auto regime = table_regime(n, d);
    if (!regime)
        throw Error(Errc::regime_mismatch, "(n, d) is not in a table regime");
    const Part k = regime_k(*regime, n, d);
    const FormContext ctx{n, d, predicted_max_last_part(n, d)};

    PartitionSet out;
    auto add = [&](Partition p) {
        if (!out.insert(p).second)
            throw Error(Errc::construction_mismatch, "bijection produced " + to_string(p) + " twice");
    };

    if (*regime == Regime::two_n_minus_4) {
        if (d == 3)
            add(exceptional_pi(n));
        else
            add(expand_form(phi_inv(StarPartition{{k}}, ctx)));
        if (k >= 3)
            for (const Partition& rho : distinct_partitions(k))
                add(expand_form(phi_inv(StarPartition{rho.vec()}, ctx)));
    } else {
        for (const Partition& s : odd_distinct_partitions(2 * k + 2)) {
            const StarPartition rho{psi_inv(make_odd_partition(s.vec())).vec()};
            const ClassTag tag = classify_2n5(rho);
            if (d == 4 && tag.kind == ClassKind::F1 && tag.h == 4)
                add(exceptional_tau(n));
            else
                add(expand_form(phi_inv(rho, ctx)));
        }
    }
    return out;
}

} // namespace unref
