#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torigid/charpair.hpp"

namespace torigid {

/// Invariants preserved by every (phi, eps, A) transformation; disagreement
/// soundly rejects equivalence before any search.
struct Fingerprint {
    std::size_t dim = 0;
    std::size_t k = 0;
    std::size_t rank = 0;
    std::vector<std::size_t> f_vec;
    AbelianGroup coker;
    std::vector<Int> vertex_index_multiset;  // per-vertex index of the columns in their saturation

    bool operator==(const Fingerprint& other) const = default;
};

Fingerprint quick_invariants(const HyperCharPair& p);

/// Change-of-basis matrices used when rank-deficient pairs were split before
/// the search (provenance; the emitted A is already composed to act on the
/// original pairs).
struct SplitData {
    IntMatrix source_change;
    IntMatrix target_change;
    std::size_t torus_factor = 0;
};

/// Witness of weak equivalence: A * xi_j = eps[j] * xi'_{phi[j]} with A in
/// GL(n+k, Z) and phi a simplicial isomorphism of the dual complexes.
struct EquivalenceCertificate {
    std::vector<int> phi;
    std::vector<int> eps;  // +1 / -1 per source facet
    IntMatrix a;
    std::optional<SplitData> split_data;
};

enum class VerdictKind { Equivalent, Inequivalent, NotSupported };
enum class InequivalenceReason { None, FingerprintMismatch, SearchExhausted };

struct SearchStats {
    std::size_t isomorphisms = 0;
    std::size_t sign_branches = 0;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Inequivalent;
    std::optional<EquivalenceCertificate> certificate;
    InequivalenceReason reason = InequivalenceReason::None;
    // An Inequivalent verdict is a rigidity theorem only when both images are
    // direct summands; otherwise the search exhaustion is sufficiency-only.
    bool certified_by_rigidity = false;
    SearchStats stats;
    std::string note;
};

/// Decides weak equivariant homeomorphism of the pairs. Exhaustive over
/// simplicial isomorphisms and sign patterns on a rational spanning column
/// set; rank-deficient pairs are split first and the certificate recomposed.
/// A branch cap, when given, returns NotSupported instead of an unsound
/// verdict.
Verdict decide_weak_equivalence(const HyperCharPair& p, const HyperCharPair& q,
                                std::optional<std::size_t> branch_cap = std::nullopt);

/// Independent recheck of all certificate invariants; never trusts the search.
bool verify_certificate(const HyperCharPair& p, const HyperCharPair& q,
                        const EquivalenceCertificate& cert);

/// Certificate p -> r from certificates p -> q and q -> r.
EquivalenceCertificate compose_certificates(const EquivalenceCertificate& pq,
                                            const EquivalenceCertificate& qr);

/// Certificate q -> p from a certificate p -> q.
EquivalenceCertificate invert_certificate(const EquivalenceCertificate& cert);

}  // namespace torigid
