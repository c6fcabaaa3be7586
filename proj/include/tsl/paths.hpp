// Piecewise-linear paths, their classification (billiard / Hecke / LS /
// generalized LS), Delta-length, and crystal generation by root operators.

#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "tsl/chains.hpp"
#include "tsl/char_oracle.hpp"
#include "tsl/root_system.hpp"

namespace tsl {

struct Segment {
    Weight direction;
    Rat duration;
};

// Constant-speed piecewise-linear path.  block_sizes optionally splits the
// segment list into consecutive factors; empty means a single block.
class PLPath {
public:
    PLPath(Weight start, std::vector<Segment> segments, std::vector<size_t> block_sizes = {});

    const Weight& start() const { return start_; }
    const std::vector<Segment>& segments() const { return segments_; }
    const std::vector<size_t>& block_sizes() const { return block_sizes_; }
    size_t block_count() const { return block_sizes_.size(); }

    Weight endpoint() const;
    // start, then position after each segment.
    std::vector<Weight> breakpoints() const;
    // Segment index range [first, last) of a block.
    std::pair<size_t, size_t> block_range(size_t block) const;

    bool operator==(const PLPath& other) const;
    size_t hash() const;

private:
    Weight start_;
    std::vector<Segment> segments_;
    std::vector<size_t> block_sizes_;
};

struct PathFlags {
    bool billiard = false;
    bool hecke = false;
    bool ls = false;
    bool generalized_ls = false;
};

struct AffineReflection {
    size_t coroot;   // index into positive_coroots
    long long level; // wall {beta = level}
};

struct DeltaLength {
    std::vector<Weight> blocks;
    Weight total;
};

class PathModel {
public:
    explicit PathModel(const RootSystem& rs, size_t crystal_cap = 500000)
        : rs_(rs), chains_(rs), cap_(crystal_cap) {}

    const RootSystem& root_system() const { return rs_; }

    // Reflections of the affine Weyl group fixing v.
    std::vector<AffineReflection> local_stabilizer_reflections(const Weight& v) const;

    PathFlags classify_path(const PLPath& p) const;

    DeltaLength delta_length(const PLPath& p) const;

    // All paths generated from the straight concatenation of the segments
    // n_i * varpi_i by the lowering root operators.  Cached per component
    // vector within this PathModel instance.
    const std::vector<PLPath>& crystal(const IVec& components);

    // Number of generated paths p with lambda + p contained in the dominant
    // chamber and lambda + p(1) = nu.
    long long path_tensor_multiplicity(const Weight& lambda, const IVec& components,
                                       const Weight& nu);

    // Lowering root operator; nullopt when undefined.
    std::optional<PLPath> root_operator_f(const PLPath& p, size_t simple) const;

    nlohmann::ordered_json path_to_json(const PLPath& p) const;
    PLPath path_from_json(const nlohmann::json& j) const;

private:
    bool block_is_ls(const PLPath& p, size_t first_seg, size_t last_seg) const;

    const RootSystem& rs_;
    ChainOracle chains_;
    size_t cap_;
    std::unordered_map<IVec, std::vector<PLPath>, IVecHash> crystal_memo_;
};

} // namespace tsl
