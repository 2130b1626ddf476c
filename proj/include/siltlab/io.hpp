#pragma once

#include <iosfwd>
#include <string>

#include "siltlab/catalog.hpp"
#include "siltlab/schur.hpp"
#include "siltlab/search.hpp"
#include "siltlab/signdecomp.hpp"

namespace siltlab {

struct AlgebraFile {
    uint32_t p = 2;
    Quiver q;
    std::vector<Relation> rels;
};

// { "p", "vertices", "arrows": [{"name","from","to"}],
//   "relations": [[{"coeff","path"}]] }
std::string algebra_to_json(const AlgebraFile& af);
AlgebraFile algebra_from_json(const std::string& text);

// { "algebra", "p", "count", "complete", "g_vectors", "hasse" }; canonical
// object order makes the output byte-stable across runs and thread counts.
std::string enumeration_to_json(const std::string& algebra, uint32_t p,
                                const EnumerationResult& r);

// Hasse quiver in DOT, nodes labeled by total g-vectors.
std::string enumeration_to_dot(const std::string& algebra, const EnumerationResult& r);

std::string sign_report_to_json(const std::string& algebra, uint32_t p,
                                const SignDecompReport& rep);
std::string sign_report_to_text(const std::string& algebra, uint32_t p,
                                const SignDecompReport& rep);

std::string classify_to_json(int n, int r, uint32_t p, const ClassifyResult& c);
std::string classify_to_text(int n, int r, uint32_t p, const ClassifyResult& c);

std::string schur_quiver_to_text(int r, uint32_t p);
std::string schur_quiver_to_dot(int r, uint32_t p);

// Write-to-temp, rename-on-success; no partial files on error.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace siltlab
