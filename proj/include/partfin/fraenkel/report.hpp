#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "partfin/counting.hpp"
#include "partfin/types.hpp"

namespace partfin {

struct FraenkelLimits {
    std::size_t max_atoms = 6;
};

/// One E-size row of a certificate bundle, with E = {0, ..., e-1}.
struct FraenkelRecord {
    std::size_t atoms = 0;
    std::size_t e = 0;
    std::size_t b = 0;

    std::size_t supported_sequences = 0;  // |seq^{1-1}(A)_E|
    BigNat arrangements;                   // a(e)
    BigNat partitions_of_e;                // B(e) = |Part(E)|
    std::size_t supported_partitions = 0; // |Part_{<=b}(A)_E|
    BigNat bounded_partitions_of_e;        // bounded Bell count of e with blocks <= b

    bool sequences_characterized = false;  // equals seq^{1-1}(E)
    bool partitions_characterized = false; // equals Part_{<=b}(E) plus singletons
    bool inequality_claimed = false;       // e >= 1
    bool inequality_holds = false;         // a(e) > B(e) >= supported partitions

    bool injection_exists = false;
    std::size_t x_count = 0;
    std::size_t y_count = 0;
    std::size_t group_order = 0;
    std::size_t x_orbits = 0;
    std::size_t y_orbits = 0;
    std::size_t matching_size = 0;
    bool pigeonhole_suffices = false;
    std::size_t hall_set_size = 0;
    std::size_t hall_neighbor_count = 0;
    bool certificate_rechecked = false;

    /// Everything the theorem's mechanism predicts held on this row.
    bool ok() const;
};

/// For each e in e_sizes: the E-supported counts, the characterizations, and
/// the verdict on fix(E)-equivariant injections seq^{1-1}(A) → Part_{<=b}(A).
/// Requires 2 <= atoms <= limits.max_atoms and 1 <= b < atoms - e for every e;
/// throws std::invalid_argument or LimitExceeded otherwise. Rows come back in
/// the order of e_sizes.
std::vector<FraenkelRecord> fraenkel_report(std::size_t atoms, const std::vector<std::size_t>& e_sizes,
                                            std::size_t b, const FraenkelLimits& limits = {});

/// One line of JSON with "kind": "fraenkel".
std::string to_record_line(const FraenkelRecord& r);

} // namespace partfin
