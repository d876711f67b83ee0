#include "partfin/fraenkel/report.hpp"

#include <stdexcept>

#include <json.hpp>

#include "partfin/enumerate.hpp"
#include "partfin/fraenkel/equivariance.hpp"
#include "partfin/fraenkel/support.hpp"

namespace partfin {

bool FraenkelRecord::ok() const
{
    return sequences_characterized && partitions_characterized &&
           (!inequality_claimed || inequality_holds) && !injection_exists &&
           certificate_rechecked;
}

namespace {

FraenkelRecord report_row(const AtomSet& A, std::size_t e, std::size_t b)
{
    const Support E = Support::first(e);
    FraenkelRecord r;
    r.atoms = A.size();
    r.e = e;
    r.b = b;

    const auto seqs = filter_supported_sequences(A, E);
    const auto parts = filter_supported_partitions(A, E, b);
    r.supported_sequences = seqs.size();
    r.supported_partitions = parts.size();
    r.sequences_characterized = seqs == injective_sequences_over(E);
    r.partitions_characterized = parts == partitions_extending(A, E, b);
    r.arrangements = arrangement_count(e);
    r.partitions_of_e = bell_count(e);
    r.bounded_partitions_of_e = bounded_bell_count(e, b);
    r.inequality_claimed = e >= 1;
    r.inequality_holds = r.arrangements > r.partitions_of_e &&
                         r.partitions_of_e >= BigNat(static_cast<unsigned long>(parts.size()));

    const auto xs = enumerate_injective_sequences(A.carrier());
    const auto ys = enumerate_partitions(A.carrier(), b);
    const auto group = fix_group(A, E);
    const auto verdict = equivariant_injection_exists(xs, ys, group);
    r.x_count = xs.size();
    r.y_count = ys.size();
    r.injection_exists = verdict.exists;
    if (verdict.exists) {
        r.certificate_rechecked = verify_equivariant_injection(verdict.map, xs, ys, group);
        return r;
    }
    const auto& cert = *verdict.certificate;
    r.group_order = cert.group_order;
    r.x_orbits = cert.x_orbit_count;
    r.y_orbits = cert.y_orbit_count;
    r.matching_size = cert.matching_size;
    r.pigeonhole_suffices = cert.pigeonhole_suffices;
    r.hall_set_size = cert.hall_set.size();
    r.hall_neighbor_count = cert.hall_neighbors.size();
    r.certificate_rechecked = check_certificate(cert, xs, ys, group) &&
                              cert.x_fixed == seqs.size() && cert.y_fixed == parts.size();
    return r;
}

} // namespace

std::vector<FraenkelRecord> fraenkel_report(std::size_t atoms, const std::vector<std::size_t>& e_sizes,
                                            std::size_t b, const FraenkelLimits& limits)
{
    if (atoms > limits.max_atoms)
        throw LimitExceeded("certificate bundles are limited to " + std::to_string(limits.max_atoms) +
                            " atoms");
    const AtomSet A(atoms);
    for (auto e : e_sizes) {
        if (e > atoms || b < 1 || b >= atoms - e)
            throw std::invalid_argument("E size " + std::to_string(e) + " with b = " + std::to_string(b) +
                                        " needs 1 <= b < " + std::to_string(atoms) + " - " +
                                        std::to_string(e));
    }
    std::vector<FraenkelRecord> rows;
    for (auto e : e_sizes)
        rows.push_back(report_row(A, e, b));
    return rows;
}

std::string to_record_line(const FraenkelRecord& r)
{
    nlohmann::ordered_json j;
    j["kind"] = "fraenkel";
    j["atoms"] = r.atoms;
    j["e"] = r.e;
    j["b"] = r.b;
    j["supported_sequences"] = r.supported_sequences;
    j["arrangements"] = r.arrangements.get_str();
    j["partitions_of_e"] = r.partitions_of_e.get_str();
    j["supported_partitions"] = r.supported_partitions;
    j["bounded_partitions_of_e"] = r.bounded_partitions_of_e.get_str();
    j["sequences_characterized"] = r.sequences_characterized;
    j["partitions_characterized"] = r.partitions_characterized;
    j["inequality_claimed"] = r.inequality_claimed;
    j["inequality_holds"] = r.inequality_holds;
    j["verdict"] = r.injection_exists ? "YES" : "NO";
    j["x_count"] = r.x_count;
    j["y_count"] = r.y_count;
    j["group_order"] = r.group_order;
    j["x_orbits"] = r.x_orbits;
    j["y_orbits"] = r.y_orbits;
    j["matching_size"] = r.matching_size;
    j["pigeonhole_suffices"] = r.pigeonhole_suffices;
    j["hall_set_size"] = r.hall_set_size;
    j["hall_neighbor_count"] = r.hall_neighbor_count;
    j["certificate_rechecked"] = r.certificate_rechecked;
    j["ok"] = r.ok();
    return j.dump();
}

} // namespace partfin
