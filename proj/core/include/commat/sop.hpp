#pragma once

#include <string>
#include <vector>

#include "commat/commutator.hpp"
#include "commat/poly.hpp"

namespace commat {

enum class SopVariant { FullOdd, FullEven, FullEvenChar2, DiagI, AntiJ };

std::string sop_variant_string(SopVariant v);

/// A homogeneous system of parameters as an explicit element list, in
/// theorem order. Every element is a single variable or a difference
/// x - y. With partial = true the identification elements (differences)
/// are omitted and only the zeroed variables remain.
struct SopList {
    SopVariant variant;
    Ring ring;
    bool partial;
    std::vector<Poly> elements;
};

SopList sop(int n, std::uint32_t characteristic, SopVariant variant, bool partial = false);

/// Turns an element list into a substitution: single variables are sent
/// to 0 and each difference x - y rewrites the y-variable as the
/// x-variable.
SpecMap spec_map(const SopList& list);

/// X and Y with the variant's specialization applied entrywise.
MatrixPair specialized_pair(int n, std::uint32_t characteristic, SopVariant variant, bool partial = false);

/// Expected element counts (exact formulas).
std::size_t sop_expected_size(int n, SopVariant variant);

struct RecursionIdentity {
    std::string name;
    bool pass;
};

struct RecursionReport {
    int n;
    std::uint32_t characteristic;
    SopVariant variant;
    bool all_pass;
    std::vector<RecursionIdentity> identities;
};

/// Checks, as exact polynomial identities under the full specialization,
/// every displayed relation between the entries of the specialized
/// commutator of the n-system and the entries of the embedded
/// (n-2)-system. Requires n >= 5.
RecursionReport verify_recursions(int n, std::uint32_t characteristic);

std::string recursion_report_to_json(const RecursionReport& report);

/// Serialized fixture for the specialized pair (X and Y as matrices of
/// Poly JSON values); byte-identical across runs.
std::string specialized_pair_fixture_json(int n, std::uint32_t characteristic, SopVariant variant);

}  // namespace commat
