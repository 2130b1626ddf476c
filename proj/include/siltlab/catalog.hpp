#pragma once

#include <optional>
#include <string>

#include "siltlab/algebra.hpp"

namespace siltlab {

struct Presentation {
    Quiver q;
    std::vector<Relation> rels;
};

struct CatalogEntry {
    std::string name;
    bool parametrized = false;
    int min_param = 0;
    uint32_t default_p = 2;
    bool expected_complete = true;
    std::string summary;
};

const std::vector<CatalogEntry>& catalog_entries();

// Throws UnknownAlgebra / BadParameter.  `param` is ignored for fixed-size
// entries.
BasedAlgebra catalog_get(const std::string& name, int param, uint32_t p);

// The bound-quiver presentation behind an entry.  For Dprime this is the
// explicit relation list; catalog_get builds Dprime through quotient_central
// instead, and tests assert the two routes agree.
Presentation catalog_presentation(const std::string& name, int param);

std::optional<uint64_t> catalog_expected_count(const std::string& name, int param);
bool catalog_expected_complete(const std::string& name);

// Parse "NAME" or "NAME:PARAM" as used by the CLI.
std::pair<std::string, int> parse_algebra_spec(const std::string& spec);

uint64_t binomial_u64(int n, int k);

}  // namespace siltlab
