#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unref/constructions.hpp"
#include "unref/partition.hpp"

namespace unref {

enum class Regime { two_n_minus_4, two_n_minus_5 };

// Table regimes only: d = n-(2k-1) with 3 <= d <= n-7, or d = n-2k with 4 <= d <= n-8.
std::optional<Regime> table_regime(Part n, Part d);

// k = (n-d+1)/2 in the 2n-4 regime, (n-d)/2 in the 2n-5 regime
Part regime_k(Regime r, Part n, Part d);

struct FormContext {
    Part n;
    Part d;
    Part last_part;
    bool operator==(const FormContext&) const = default;
};

// The missing parts <= n-3 of a maximal partition, with the context the
// prose leaves implicit. Empty values stand for pi (2n-4) or tau (2n-5).
struct ReducedForm {
    std::vector<Part> values;
    FormContext context;
    bool operator==(const ReducedForm&) const = default;
};

// Ascending distinct positive parts; may be empty, and may be the single
// list (k), which is why this is not a Partition.
struct StarPartition {
    std::vector<Part> parts;
    bool single_part() const noexcept { return parts.size() == 1; }
    bool empty() const noexcept { return parts.empty(); }
    Part sum() const;
    bool operator==(const StarPartition&) const = default;
};

StarPartition make_star(std::vector<Part> parts);

enum class ClassKind { A, B, C, D, E1, E2, E3, E4, F1, F2, F3, F4 };

struct ClassTag {
    ClassKind kind;
    Part h;
    bool operator==(const ClassTag&) const = default;
};

const char* to_string(ClassKind k) noexcept;

// Distinct odd parts, even length, built only through make_odd_partition.
class OddPartition {
  public:
    const std::vector<Part>& parts() const noexcept { return parts_; }
    Part total() const noexcept { return total_; }
    bool operator==(const OddPartition&) const = default;

  private:
    OddPartition(std::vector<Part> p, Part total) : parts_(std::move(p)), total_(total) {}
    friend OddPartition make_odd_partition(std::vector<Part> parts);
    std::vector<Part> parts_;
    Part total_;
};

// throws Errc::invalid_odd_partition
OddPartition make_odd_partition(std::vector<Part> parts);

// (1..n-2, 2n-4) and (1..n-2, 2n-5)
Partition exceptional_pi(Part n);
Partition exceptional_tau(Part n);

ReducedForm reduce_form(const Partition& p, Part n);
Partition expand_form(const ReducedForm& eta);

// x -> n-2-x, reversed; shared by phi and phi_inv
std::vector<Part> complement_reverse(std::span<const Part> values, Part n);

StarPartition phi(const ReducedForm& eta);
// validates that rho lies in a starred class of the context
ReducedForm phi_inv(const StarPartition& rho, const FormContext& ctx);

ClassTag classify_2n4(const StarPartition& rho);
ClassTag classify_2n5(const StarPartition& rho);

// the sum a rho of this class must have, given k
Part star_sum_2n5(const ClassTag& tag, Part k);

OddPartition psi(const Partition& lambda);
Partition psi_inv(const OddPartition& sigma);

PartitionSet generate_via_bijection(Part n, Part d);

} // namespace unref
