#pragma once

#include <optional>
#include <string>

#include "verocohom/branch.hpp"
#include "verocohom/cohomology.hpp"
#include "verocohom/surface.hpp"

namespace verocohom {

/// A map description as read from a JSON document. Exactly one of the three
/// center/form encodings must be present. Polynomials are arrays of terms
/// [numerator, denominator, [e_0, ..., e_n]].
struct SpecFile {
    unsigned n = 0;
    unsigned d = 0;
    std::optional<std::vector<MultiIndex>> T_monomials;
    std::optional<std::vector<QPoly>> T_polynomials;   // primal
    std::optional<std::vector<QPoly>> map_polynomials; // primal
    std::optional<unsigned> declared_dim_T;
};

SpecFile parse_specfile_text(const std::string& text);
SpecFile parse_specfile(const std::string& path);
MapSpec build_spec(const SpecFile& file);

struct InfoReport {
    unsigned n = 0, d = 0;
    unsigned long N = 0;
    unsigned s = 0;
    unsigned long dim_T = 0;
    std::string base_points;                   // "verified" | "FAILS" | "not verified"
    std::optional<bool> smoothness_ok;         // only for n = 2 monomial centers
    std::vector<Triple> smoothness_bad;
    std::optional<unsigned> declared_dim_T;    // echoed when it disagrees
};

InfoReport make_info(const SpecFile& file, const MapSpec& spec);

std::string table_to_text(const MapSpec& spec, const CohomTable& t);
std::string table_to_csv(const MapSpec& spec, const CohomTable& t);
std::string table_to_json(const SpecFile& file, const MapSpec& spec, const CohomTable& t);

std::string branch_to_text(const MapSpec& spec, const BranchReport& rep);
std::string branch_to_json(const SpecFile& file, const MapSpec& spec, const BranchReport& rep);

std::string info_to_text(const InfoReport& info);
std::string info_to_json(const InfoReport& info);

} // namespace verocohom
