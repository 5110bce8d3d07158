#include "linespace/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace linespace::designs {

namespace {

constexpr long long kNodeCap = 20'000'000;

class Canonicalizer {
public:
    explicit Canonicalizer(const Design& design) : v_(design.v), b_(static_cast<int>(design.blocks.size())) {
        if (design.v < 1) throw std::invalid_argument("canonical_form: empty point set");
        if (design.v > 2000 || design.blocks.size() > 25000)
            throw std::invalid_argument("canonical_form: size limit exceeded");
        blocks_ = design.blocks;
        for (auto& blk : blocks_) std::sort(blk.begin(), blk.end());
        {
            auto sorted = blocks_;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw std::invalid_argument("canonical_form: blocks must be pairwise distinct");
        }
        block_set_.insert(blocks_.begin(), blocks_.end());
        incident_.resize(static_cast<std::size_t>(v_));
        for (int bi = 0; bi < b_; ++bi)
            for (int p : blocks_[static_cast<std::size_t>(bi)]) {
                if (p < 0 || p >= v_) throw std::invalid_argument("canonical_form: point out of range");
                incident_[static_cast<std::size_t>(p)].push_back(bi);
            }
    }

    Certificate run() {
        std::vector<int> pt_color(static_cast<std::size_t>(v_), 0);
        std::vector<int> blk_color(static_cast<std::size_t>(b_), 0);
        refine(pt_color, blk_color);
        recurse(pt_color, blk_color);

        Certificate cert;
        cert.v = v_;
        cert.canonical_blocks = best_blocks_;
        cert.relabeling = best_label_;
        return cert;
    }

private:
    // --- refinement -------------------------------------------------------

    static int renumber(const std::vector<std::pair<std::vector<int>, int>>& keyed,
                        std::vector<int>& color) {
        // assign ranks of distinct keys, in key order
        int next = -1;
        const std::vector<int>* prev = nullptr;
        for (const auto& [key, idx] : keyed) {
            if (!prev || *prev != key) ++next;
            color[static_cast<std::size_t>(idx)] = next;
            prev = &key;
        }
        return next + 1;
    }

    void refine(std::vector<int>& pt_color, std::vector<int>& blk_color) const {
        int npt = 0, nblk = 0;
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> keyed;
            keyed.reserve(static_cast<std::size_t>(b_));
            for (int bi = 0; bi < b_; ++bi) {
                std::vector<int> key;
                key.reserve(blocks_[static_cast<std::size_t>(bi)].size() + 1);
                key.push_back(blk_color[static_cast<std::size_t>(bi)]);
                for (int p : blocks_[static_cast<std::size_t>(bi)])
                    key.push_back(pt_color[static_cast<std::size_t>(p)]);
                std::sort(key.begin() + 1, key.end());
                keyed.emplace_back(std::move(key), bi);
            }
            std::sort(keyed.begin(), keyed.end());
            const int new_nblk = renumber(keyed, blk_color);

            keyed.clear();
            for (int p = 0; p < v_; ++p) {
                std::vector<int> key;
                key.reserve(incident_[static_cast<std::size_t>(p)].size() + 1);
                key.push_back(pt_color[static_cast<std::size_t>(p)]);
                for (int bi : incident_[static_cast<std::size_t>(p)])
                    key.push_back(blk_color[static_cast<std::size_t>(bi)]);
                std::sort(key.begin() + 1, key.end());
                keyed.emplace_back(std::move(key), p);
            }
            std::sort(keyed.begin(), keyed.end());
            const int new_npt = renumber(keyed, pt_color);

            if (new_npt == npt && new_nblk == nblk) break;
            npt = new_npt;
            nblk = new_nblk;
            if (npt == v_) break;  // points discrete; block order follows from labels
        }
    }

    // --- search -----------------------------------------------------------

    bool discrete(const std::vector<int>& pt_color) const {
        std::vector<char> seen(static_cast<std::size_t>(v_), 0);
        for (int c : pt_color) {
            if (seen[static_cast<std::size_t>(c)]) return false;
            seen[static_cast<std::size_t>(c)] = 1;
        }
        return true;
    }

    std::vector<int> target_cell(const std::vector<int>& pt_color) const {
        // smallest cell of size >= 2; ties broken by color id
        std::vector<int> count(static_cast<std::size_t>(v_) + 1, 0);
        for (int c : pt_color) ++count[static_cast<std::size_t>(c)];
        int best_color = -1;
        for (std::size_t c = 0; c < count.size(); ++c) {
            if (count[c] < 2) continue;
            if (best_color == -1 || count[c] < count[static_cast<std::size_t>(best_color)])
                best_color = static_cast<int>(c);
        }
        std::vector<int> cell;
        for (int p = 0; p < v_; ++p)
            if (pt_color[static_cast<std::size_t>(p)] == best_color) cell.push_back(p);
        return cell;
    }

    void recurse(const std::vector<int>& pt_color, const std::vector<int>& blk_color) {
        if (++nodes_ > kNodeCap) throw std::runtime_error("canonical_form: search node cap exceeded");
        if (discrete(pt_color)) {
            handle_leaf(pt_color);
            return;
        }
        const std::vector<int> cell = target_cell(pt_color);
        std::vector<int> tried;
        std::size_t merged_auts = 0;
        std::vector<int> uf(static_cast<std::size_t>(v_));
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&uf](int x) {
            while (uf[static_cast<std::size_t>(x)] != x) {
                uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
                x = uf[static_cast<std::size_t>(x)];
            }
            return x;
        };

        for (int w : cell) {
            // merge any automorphisms discovered since the last candidate;
            // only those fixing the individualized prefix pointwise apply here
            for (; merged_auts < automorphisms_.size(); ++merged_auts) {
                const auto& sigma = automorphisms_[merged_auts];
                bool fixes_prefix = true;
                for (int p : prefix_)
                    if (sigma[static_cast<std::size_t>(p)] != p) {
                        fixes_prefix = false;
                        break;
                    }
                if (!fixes_prefix) continue;
                for (int p = 0; p < v_; ++p) {
                    int a = find(p), c = find(sigma[static_cast<std::size_t>(p)]);
                    if (a != c) uf[static_cast<std::size_t>(std::max(a, c))] = std::min(a, c);
                }
            }
            bool skip = false;
            for (int t : tried)
                if (find(t) == find(w)) {
                    skip = true;
                    break;
                }
            if (skip) continue;

            auto child_pt = pt_color;
            auto child_blk = blk_color;
            child_pt[static_cast<std::size_t>(w)] += v_;  // unique marker; refine renormalizes
            refine(child_pt, child_blk);
            prefix_.push_back(w);
            recurse(child_pt, child_blk);
            prefix_.pop_back();
            tried.push_back(w);
        }
    }

    void handle_leaf(const std::vector<int>& pt_color) {
        std::vector<std::vector<int>> relabeled(blocks_.size());
        for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
            auto& out = relabeled[bi];
            out.reserve(blocks_[bi].size());
            for (int p : blocks_[bi]) out.push_back(pt_color[static_cast<std::size_t>(p)]);
            std::sort(out.begin(), out.end());
        }
        std::sort(relabeled.begin(), relabeled.end());

        if (best_label_.empty() || relabeled < best_blocks_) {
            best_blocks_ = std::move(relabeled);
            best_label_ = pt_color;
        } else if (relabeled == best_blocks_) {
            record_automorphism(pt_color);
        }
    }

    void record_automorphism(const std::vector<int>& leaf_label) {
        std::vector<int> leaf_inverse(static_cast<std::size_t>(v_));
        for (int p = 0; p < v_; ++p)
            leaf_inverse[static_cast<std::size_t>(leaf_label[static_cast<std::size_t>(p)])] = p;
        std::vector<int> sigma(static_cast<std::size_t>(v_));
        bool identity = true;
        for (int p = 0; p < v_; ++p) {
            sigma[static_cast<std::size_t>(p)] =
                leaf_inverse[static_cast<std::size_t>(best_label_[static_cast<std::size_t>(p)])];
            identity = identity && sigma[static_cast<std::size_t>(p)] == p;
        }
        if (identity) return;
        // equal certificates force sigma to preserve the block set; verify anyway
        for (const auto& blk : blocks_) {
            std::vector<int> img;
            img.reserve(blk.size());
            for (int p : blk) img.push_back(sigma[static_cast<std::size_t>(p)]);
            std::sort(img.begin(), img.end());
            if (!block_set_.count(img))
                throw std::logic_error("canonical_form: derived map is not an automorphism");
        }
        automorphisms_.push_back(std::move(sigma));
    }

    int v_;
    int b_;
    std::vector<std::vector<int>> blocks_;
    std::set<std::vector<int>> block_set_;
    std::vector<std::vector<int>> incident_;

    std::vector<int> prefix_;
    std::vector<std::vector<int>> automorphisms_;
    std::vector<std::vector<int>> best_blocks_;
    std::vector<int> best_label_;
    long long nodes_ = 0;
};

}  // namespace

Certificate canonical_form(const Design& design) {
    if (design.blocks.empty()) {
        Certificate cert;
        cert.v = design.v;
        cert.relabeling.resize(static_cast<std::size_t>(design.v));
        std::iota(cert.relabeling.begin(), cert.relabeling.end(), 0);
        return cert;
    }
    return Canonicalizer(design).run();
}

}  // namespace linespace::designs
