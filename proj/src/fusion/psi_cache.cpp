#include "hcs/fusion/psi_cache.hpp"

#include "hcs/algebra/element_json.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unistd.h>

namespace hcs {

PsiCache::PsiCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<PsiCache> PsiCache::from_env() {
    const char* v = std::getenv(kEnvVar);
    if (!v || !*v) return std::nullopt;
    return PsiCache(v);
}

std::filesystem::path PsiCache::path_for(const ShiftedTableau& t) const {
    return dir_ / ("psi-n" + std::to_string(t.n()) + "-" + t.shape().key() + "-" + t.key() + ".json");
}

std::string PsiCache::serialize(const ShiftedTableau& t, const AlgebraElement& psi) {
    Json j;
    j["n"] = t.n();
    j["shape"] = t.shape().parts();
    j["tableau"] = t.to_json();
    j["psi"] = to_json(psi);
    return j.dump() + "\n";
}

std::optional<AlgebraElement> PsiCache::load(const ShiftedTableau& t) const {
    const auto p = path_for(t);
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    try {
        const Json j = Json::parse(in);
        if (ShiftedTableau::from_json(j.at("tableau")) != t) throw std::runtime_error("tableau mismatch");
        return element_from_json(j.at("psi"));
    } catch (const std::exception& e) {
        throw std::runtime_error("psi cache: corrupt entry " + p.string() + ": " + e.what());
    }
}

std::filesystem::path PsiCache::store(const ShiftedTableau& t, const AlgebraElement& psi) const {
    static std::atomic<unsigned> counter{0};
    std::filesystem::create_directories(dir_);
    const auto target = path_for(t);
    std::ostringstream tmp_name;
    tmp_name << target.filename().string() << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id())
             << "." << counter++;
    const auto tmp = dir_ / tmp_name.str();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("psi cache: cannot write " + tmp.string());
        out << serialize(t, psi);
        if (!out.flush()) throw std::runtime_error("psi cache: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
    return target;
}

}  // namespace hcs
