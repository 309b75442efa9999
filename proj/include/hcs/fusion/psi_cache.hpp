#pragma once

#include "hcs/algebra/element.hpp"
#include "hcs/combinat/shifted_tableau.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace hcs {

// On-disk store of exact psi_Lambda values, one canonical JSON file per (n, lambda, Lambda).
// Files are written to a temporary name and renamed into place, so concurrent writers never
// expose a partial file.
class PsiCache {
public:
    static constexpr const char* kEnvVar = "HCS_CACHE_DIR";

    explicit PsiCache(std::filesystem::path dir);
    // The cache named by HCS_CACHE_DIR, if set and non-empty.
    static std::optional<PsiCache> from_env();

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(const ShiftedTableau& t) const;

    // Returns nothing when the file is missing; throws std::runtime_error on a corrupt file.
    std::optional<AlgebraElement> load(const ShiftedTableau& t) const;
    // Returns the path written.
    std::filesystem::path store(const ShiftedTableau& t, const AlgebraElement& psi) const;

    // Canonical text of the cache entry.
    static std::string serialize(const ShiftedTableau& t, const AlgebraElement& psi);

private:
    std::filesystem::path dir_;
};

}  // namespace hcs
