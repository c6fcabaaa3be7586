#include "tsl/paths.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace tsl {

namespace {

struct VecHash {
    size_t operator()(const Vec& v) const { return vec_hash(v); }
};

// dir2 = c * dir1 with c > 0.
bool same_ray(const Weight& a, const Weight& b)
{
    Rat c;
    bool have = false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() != b[i].is_zero()) return false;
        if (a[i].is_zero()) continue;
        Rat q = b[i] / a[i];
        if (q <= Rat(0)) return false;
        if (have && q != c) return false;
        c = q;
        have = true;
    }
    return have;
}

} // namespace

PLPath::PLPath(Weight start, std::vector<Segment> segments, std::vector<size_t> block_sizes)
    : start_(std::move(start))
{
    if (block_sizes.empty()) block_sizes.push_back(segments.size());
    size_t total = 0;
    for (size_t s : block_sizes) total += s;
    if (total != segments.size()) throw error("PLPath: block sizes do not cover the segments");

    size_t idx = 0;
    for (size_t b = 0; b < block_sizes.size(); ++b) {
        size_t kept = 0;
        for (size_t k = 0; k < block_sizes[b]; ++k, ++idx) {
            Segment seg = segments[idx];
            if (vec_is_zero(seg.direction)) throw error("PLPath: zero direction");
            if (seg.duration <= Rat(0)) throw error("PLPath: nonpositive duration");
            if (kept > 0 && same_ray(segments_.back().direction, seg.direction)) {
                // merge collinear consecutive segments inside a block, keeping
                // the earlier direction vector so speeds stay comparable
                Segment& prev = segments_.back();
                size_t i = 0;
                while (prev.direction[i].is_zero()) ++i;
                Rat c = seg.direction[i] / prev.direction[i];
                prev.duration += c * seg.duration;
            } else {
                segments_.push_back(seg);
                ++kept;
            }
        }
        block_sizes_.push_back(kept);
    }
}

Weight PLPath::endpoint() const
{
    Weight v = start_;
    for (const Segment& s : segments_) v = vec_add(v, vec_scale(s.duration, s.direction));
    return v;
}

std::vector<Weight> PLPath::breakpoints() const
{
    std::vector<Weight> pts{start_};
    for (const Segment& s : segments_)
        pts.push_back(vec_add(pts.back(), vec_scale(s.duration, s.direction)));
    return pts;
}

std::pair<size_t, size_t> PLPath::block_range(size_t block) const
{
    size_t first = 0;
    for (size_t b = 0; b < block; ++b) first += block_sizes_[b];
    return {first, first + block_sizes_[block]};
}

bool PLPath::operator==(const PLPath& other) const
{
    if (start_ != other.start_ || block_sizes_ != other.block_sizes_) return false;
    if (segments_.size() != other.segments_.size()) return false;
    for (size_t i = 0; i < segments_.size(); ++i) {
        Weight a = vec_scale(segments_[i].duration, segments_[i].direction);
        Weight b = vec_scale(other.segments_[i].duration, other.segments_[i].direction);
        if (a != b) return false;
    }
    return true;
}

size_t PLPath::hash() const
{
    size_t h = vec_hash(start_);
    for (const Segment& s : segments_)
        h = h * 1099511628211ull ^ vec_hash(vec_scale(s.duration, s.direction));
    for (size_t b : block_sizes_) h = h * 31 + b;
    return h;
}

std::vector<AffineReflection> PathModel::local_stabilizer_reflections(const Weight& v) const
{
    std::vector<AffineReflection> out;
    for (size_t b = 0; b < rs_.positive_coroots().size(); ++b) {
        Rat t = rs_.pair(rs_.positive_coroots()[b], v);
        if (t.is_integer()) out.push_back({b, t.as_integer()});
    }
    return out;
}

DeltaLength PathModel::delta_length(const PLPath& p) const
{
    DeltaLength out;
    out.total = Weight(p.start().size(), Rat(0));
    for (size_t b = 0; b < p.block_count(); ++b) {
        auto [first, last] = p.block_range(b);
        Weight sum(p.start().size(), Rat(0));
        for (size_t k = first; k < last; ++k) {
            Weight disp = vec_scale(p.segments()[k].duration, p.segments()[k].direction);
            sum = vec_add(sum, rs_.dominant_rep(disp));
        }
        out.blocks.push_back(sum);
        out.total = vec_add(out.total, sum);
    }
    return out;
}

namespace {

// Directional derivatives under the constant-speed parameterization are the
// segment displacements rescaled to a common length.  Returns the outgoing
// displacement rescaled to the incoming one's length, when the ratio of
// lengths is rational; reflections can relate the two only in that case.
std::optional<Weight> match_speed(const RootSystem& rs, const Weight& disp_in,
                                  const Weight& disp_out)
{
    Rat ratio = rs.inner(disp_in, disp_in) / rs.inner(disp_out, disp_out);
    Rat q;
    if (!Rat::sqrt_exact(ratio, q)) return std::nullopt;
    return vec_scale(q, disp_out);
}

// All chains from eta to xi whose witnesses fix `point`, by depth-first search.
void stabilizer_chains(const ChainOracle& chains, const Weight& point, const Weight& xi,
                       Chain& cur, std::vector<Chain>& out)
{
    if (cur.vectors.back() == xi) {
        out.push_back(cur);
        return;
    }
    for (auto& [nxt, b] : chains.steps_down(cur.vectors.back(), &point)) {
        cur.vectors.push_back(nxt);
        cur.witnesses.push_back(b);
        stabilizer_chains(chains, point, xi, cur, out);
        cur.vectors.pop_back();
        cur.witnesses.pop_back();
    }
}

} // namespace

bool PathModel::block_is_ls(const PLPath& p, size_t first_seg, size_t last_seg) const
{
    if (first_seg == last_seg) return true;
    std::vector<Weight> pts = p.breakpoints();
    if (!rs_.lattice_member(pts[first_seg], Lattice::WeightLat) ||
        !rs_.lattice_member(pts[last_seg], Lattice::WeightLat))
        return false;
    for (size_t k = first_seg + 1; k < last_seg; ++k) {
        Weight in = vec_sub(pts[k], pts[k - 1]);
        Weight raw_out = vec_sub(pts[k + 1], pts[k]);
        if (same_ray(in, raw_out)) continue;  // geodesic point
        auto out = match_speed(rs_, in, raw_out);
        if (!out) return false;
        Chain cur;
        cur.vectors.push_back(in);
        std::vector<Chain> found;
        stabilizer_chains(chains_, pts[k], *out, cur, found);
        bool ok = false;
        for (const Chain& c : found)
            if (chains_.is_maximal_chain(c)) { ok = true; break; }
        if (!ok) return false;
    }
    return true;
}

PathFlags PathModel::classify_path(const PLPath& p) const
{
    PathFlags flags;
    std::vector<Weight> pts = p.breakpoints();

    // billiard: at each break the incoming direction lies in the orbit of the
    // outgoing one under the reflections fixing the point.
    flags.billiard = true;
    for (size_t k = 1; k + 1 < pts.size() && flags.billiard; ++k) {
        Weight in = vec_sub(pts[k], pts[k - 1]);
        Weight raw_out = vec_sub(pts[k + 1], pts[k]);
        if (same_ray(in, raw_out)) continue;
        auto matched = match_speed(rs_, in, raw_out);
        if (!matched) { flags.billiard = false; break; }
        Weight out = *matched;
        std::unordered_set<Vec, VecHash> orbit{out};
        std::queue<Weight> q;
        q.push(out);
        auto stab = local_stabilizer_reflections(pts[k]);
        bool hit = false;
        while (!q.empty() && !hit) {
            Weight cur = q.front();
            q.pop();
            for (const AffineReflection& r : stab) {
                Weight nxt = rs_.reflect(r.coroot, cur);
                if (orbit.insert(nxt).second) {
                    if (nxt == in) { hit = true; break; }
                    q.push(nxt);
                }
            }
        }
        flags.billiard = hit;
    }

    bool endpoints_ok = rs_.lattice_member(pts.front(), Lattice::WeightLat) &&
                        rs_.lattice_member(pts.back(), Lattice::WeightLat);

    // hecke: endpoints in P(R) and a local-stabilizer chain at every break.
    flags.hecke = endpoints_ok;
    for (size_t k = 1; k + 1 < pts.size() && flags.hecke; ++k) {
        Weight in = vec_sub(pts[k], pts[k - 1]);
        Weight raw_out = vec_sub(pts[k + 1], pts[k]);
        if (same_ray(in, raw_out)) continue;
        auto matched = match_speed(rs_, in, raw_out);
        flags.hecke = matched &&
            chains_.find_chain(in, *matched, ChainGroup::Stabilizer, &pts[k]).has_value();
    }

    // ls: additionally some local chain is maximal as a W-chain.
    flags.ls = flags.hecke && block_is_ls(p, 0, p.segments().size());

    // generalized ls: LS blocks joined by >~.
    flags.generalized_ls = true;
    std::vector<size_t> nonempty;
    for (size_t b = 0; b < p.block_count(); ++b)
        if (p.block_sizes()[b] > 0) nonempty.push_back(b);
    for (size_t b : nonempty) {
        auto [first, last] = p.block_range(b);
        if (!block_is_ls(p, first, last)) { flags.generalized_ls = false; break; }
    }
    for (size_t i = 0; i + 1 < nonempty.size() && flags.generalized_ls; ++i) {
        auto [f1, l1] = p.block_range(nonempty[i]);
        auto [f2, l2] = p.block_range(nonempty[i + 1]);
        (void)f1; (void)l2;
        const Weight& in = p.segments()[l1 - 1].direction;
        const Weight& out = p.segments()[f2].direction;
        flags.generalized_ls = chains_.relation(in, out, RelationKind::Gtrsim);
    }
    return flags;
}

std::optional<PLPath> PathModel::root_operator_f(const PLPath& p, size_t simple) const
{
    const Form& coroot = rs_.simple_coroots()[simple];

    std::vector<Segment> segs = p.segments();
    std::vector<size_t> blocks = p.block_sizes();

    std::vector<Rat> h{rs_.pair(coroot, p.start())};
    for (const Segment& s : segs)
        h.push_back(h.back() + s.duration * rs_.pair(coroot, s.direction));

    Rat m = h[0];
    for (const Rat& v : h) m = std::min(m, v);
    if (h.back() - m < Rat(1)) return std::nullopt;
    if (!m.is_integer()) throw error("root operator on a path with non-integral minimum");

    size_t k0 = 0;
    for (size_t k = 0; k < h.size(); ++k)
        if (h[k] == m) k0 = k;

    // First crossing of m+1 after k0; h > m strictly beyond k0, and the first
    // touch of m+1 comes from below, inside or at the end of a rising segment.
    Rat target = m + Rat(1);
    size_t k1 = h.size();
    std::optional<size_t> split_at;
    Rat split_dur;
    for (size_t k = k0 + 1; k < h.size(); ++k) {
        if (h[k] == target) { k1 = k; break; }
        if (h[k] > target) {
            Rat slope = rs_.pair(coroot, segs[k - 1].direction);
            split_at = k - 1;
            split_dur = (target - h[k - 1]) / slope;
            k1 = k;
            break;
        }
    }
    if (k1 == h.size()) throw error("root operator: level m+1 not reached");

    if (split_at) {
        Segment tail = segs[*split_at];
        tail.duration = segs[*split_at].duration - split_dur;
        segs[*split_at].duration = split_dur;
        segs.insert(segs.begin() + static_cast<long>(*split_at) + 1, tail);
        size_t acc = 0;
        for (size_t b = 0; b < blocks.size(); ++b) {
            acc += blocks[b];
            if (*split_at < acc) { ++blocks[b]; break; }
        }
    }

    // Reflect directions on segments [k0, k1); the rest only translates.
    for (size_t k = k0; k < k1; ++k)
        segs[k].direction = vec_sub(segs[k].direction,
                                    vec_scale(rs_.pair(coroot, segs[k].direction),
                                              rs_.simple_roots()[simple]));
    return PLPath(p.start(), std::move(segs), std::move(blocks));
}

const std::vector<PLPath>& PathModel::crystal(const IVec& components)
{
    auto hit = crystal_memo_.find(components);
    if (hit != crystal_memo_.end()) return hit->second;

    if (components.size() != rs_.rank()) throw error("crystal: wrong component count");
    for (long long n : components)
        if (n < 0) throw error("crystal: negative component");

    Weight zero(rs_.fundamental_weights()[0].size(), Rat(0));
    std::vector<Segment> segs;
    std::vector<size_t> blocks;
    for (size_t i = 0; i < components.size(); ++i) {
        if (components[i] > 0) {
            segs.push_back({rs_.fundamental_weights()[i], Rat(components[i])});
            blocks.push_back(1);
        } else {
            blocks.push_back(0);
        }
    }
    if (segs.empty()) {
        // the constant path
        std::vector<PLPath> only;
        only.push_back(PLPath(zero, {}, blocks));
        return crystal_memo_.emplace(components, std::move(only)).first->second;
    }

    std::vector<PLPath> all;
    std::unordered_map<size_t, std::vector<size_t>> buckets;
    std::queue<size_t> work;
    auto push = [&](PLPath&& q) {
        size_t h = q.hash();
        for (size_t idx : buckets[h])
            if (all[idx] == q) return;
        buckets[h].push_back(all.size());
        all.push_back(std::move(q));
        work.push(all.size() - 1);
        if (all.size() > cap_)
            throw cap_error("crystal exceeded cap " + std::to_string(cap_) + " paths");
    };
    push(PLPath(zero, segs, blocks));
    while (!work.empty()) {
        size_t cur = work.front();
        work.pop();
        for (size_t i = 0; i < rs_.rank(); ++i) {
            auto next = root_operator_f(all[cur], i);
            if (next) push(std::move(*next));
        }
    }
    std::sort(all.begin(), all.end(), [](const PLPath& a, const PLPath& b) {
        std::string sa, sb;
        for (const Segment& s : a.segments()) sa += vec_str(vec_scale(s.duration, s.direction));
        for (const Segment& s : b.segments()) sb += vec_str(vec_scale(s.duration, s.direction));
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        return sa < sb;
    });
    return crystal_memo_.emplace(components, std::move(all)).first->second;
}

nlohmann::ordered_json PathModel::path_to_json(const PLPath& p) const
{
    nlohmann::ordered_json j;
    j["start"] = rs_.weight_str(p.start());
    nlohmann::ordered_json segs = nlohmann::ordered_json::array();
    for (const Segment& s : p.segments())
        segs.push_back({{"direction", rs_.weight_str(s.direction)},
                        {"duration", s.duration.str()}});
    j["segments"] = std::move(segs);
    if (p.block_count() > 1) j["blocks"] = p.block_sizes();
    return j;
}

PLPath PathModel::path_from_json(const nlohmann::json& j) const
{
    Weight start = rs_.weight_parse(j.at("start").get<std::string>());
    std::vector<Segment> segs;
    for (const auto& s : j.at("segments"))
        segs.push_back({rs_.weight_parse(s.at("direction").get<std::string>()),
                        Rat::parse(s.at("duration").get<std::string>())});
    std::vector<size_t> blocks;
    if (j.contains("blocks")) blocks = j.at("blocks").get<std::vector<size_t>>();
    return PLPath(std::move(start), std::move(segs), std::move(blocks));
}

long long PathModel::path_tensor_multiplicity(const Weight& lambda, const IVec& components,
                                              const Weight& nu)
{
    if (!rs_.is_dominant(lambda) || !rs_.lattice_member(lambda, Lattice::WeightLat))
        throw error("path_tensor_multiplicity: lambda must be dominant and integral");
    if (!rs_.is_dominant(nu)) throw error("path_tensor_multiplicity: nu must be dominant");

    long long count = 0;
    for (const PLPath& p : crystal(components)) {
        Weight at = lambda;
        bool inside = rs_.is_dominant(at);
        for (const Segment& s : p.segments()) {
            if (!inside) break;
            at = vec_add(at, vec_scale(s.duration, s.direction));
            inside = rs_.is_dominant(at);
        }
        if (inside && at == nu) ++count;
    }
    return count;
}

} // namespace tsl
