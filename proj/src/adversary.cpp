#include "uic/adversary.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace uic::adversary {

namespace {

class NaiveColorer final : public DynamicColorer {
public:
    explicit NaiveColorer(int k) : k_(k) {
        if (k < 1) throw std::invalid_argument("naive_colorer: k must be >= 1");
    }

    std::int64_t insert(const Coord& x) override {
        UnitInterval iv{x, next_arrival_++};
        auto it = set_.insert(iv);
        by_arrival_.emplace(iv.arrival, iv);
        recolor_component(it);
        return iv.arrival;
    }

    void erase(std::int64_t arrival) override {
        auto found = by_arrival_.find(arrival);
        if (found == by_arrival_.end())
            throw std::invalid_argument("naive_colorer: unknown arrival");
        auto it = set_.find(found->second);
        auto right = it;
        ++right;
        bool has_left = it != set_.begin();
        auto left = it;
        if (has_left) --left;
        set_.erase(found->second);
        coloring_.erase(arrival);
        by_arrival_.erase(found);
        // The component may have split; refresh both sides.
        if (has_left) recolor_component(set_.find(*left));
        if (right != set_.end()) recolor_component(set_.find(*right));
    }

    const Coloring& coloring() const override { return coloring_; }
    int k() const override { return k_; }

private:
    // First-fit over the maximal connected run containing `it`.
    void recolor_component(SequencedSet::iterator it) {
        auto lo = it;
        while (lo != set_.begin()) {
            auto prev = lo;
            --prev;
            if (!intersects(*prev, *lo)) break;
            lo = prev;
        }
        auto hi = it;
        for (auto nx = std::next(hi); nx != set_.end() && intersects(*hi, *nx); hi = nx, ++nx) {
        }
        std::vector<UnitInterval> run = set_.slice(lo, hi);
        for (std::size_t i = 0; i < run.size(); ++i) {
            std::vector<bool> used(static_cast<std::size_t>(k_) + 1, false);
            for (std::size_t j = 0; j < i; ++j)
                if (intersects(run[j], run[i])) used[coloring_.at(run[j].arrival)] = true;
            int chosen = 0;
            for (int col = 1; col <= k_; ++col)
                if (!used[col]) {
                    chosen = col;
                    break;
                }
            if (chosen == 0)
                throw std::invalid_argument("naive_colorer: instance not k-colorable");
            coloring_[run[i].arrival] = chosen;
        }
    }

    int k_;
    SequencedSet set_;
    Coloring coloring_;
    std::unordered_map<std::int64_t, UnitInterval> by_arrival_;
    std::int64_t next_arrival_ = 0;
};

}  // namespace

std::unique_ptr<DynamicColorer> naive_colorer(int k) {
    return std::make_unique<NaiveColorer>(k);
}

GadgetInstance build_gadget(int n) {
    if (n < 1) throw std::invalid_argument("build_gadget: n must be >= 1");
    GadgetInstance g;
    g.n = n;

    // Left half, right to left from K_1 = [0, 1): alternating K and L at
    // steps of 5/8, so only sequence neighbors intersect. Right half mirrors
    // it starting at I_1 = [3/2, 5/2).
    const Coord step(5, 8);
    std::vector<Coord> left_half, right_half;
    for (int t = 0; t < 2 * n; ++t) left_half.push_back(Coord(0) - step * Coord(t));
    for (int t = 0; t < 2 * n; ++t) right_half.push_back(Coord(3, 2) + step * Coord(t));

    for (auto it = left_half.rbegin(); it != left_half.rend(); ++it) g.coords.push_back(*it);
    g.k1_index = g.coords.size() - 1;
    g.i1_index = g.coords.size();
    for (const auto& c : right_half) g.coords.push_back(c);

    g.probe_pair_first = Coord(7, 16);   // meets K_1 only
    g.probe_pair_second = Coord(9, 8);   // meets the first probe and I_1
    g.probe_single = Coord(3, 4);        // meets both K_1 and I_1
    return g;
}

InstalledGadget install_gadget(DynamicColorer& colorer, const GadgetInstance& gadget) {
    InstalledGadget out;
    out.gadget = gadget;
    out.arrivals.reserve(gadget.coords.size());
    for (const auto& c : gadget.coords) out.arrivals.push_back(colorer.insert(c));
    return out;
}

namespace {

// The adversary tracks the multiset itself, so properness of the colorer's
// answer is checked without trusting the colorer.
void check_proper(const SequencedSet& mirror, const DynamicColorer& colorer, const char* when) {
    std::string diag;
    if (!verify_proper(mirror, colorer.coloring(), colorer.k(), &diag)) {
        std::ostringstream os;
        os << "adversary: colorer violated properness " << when << ": " << diag;
        throw std::runtime_error(os.str());
    }
}

}  // namespace

int probe(DynamicColorer& colorer, const InstalledGadget& installed) {
    if (colorer.k() != 2) throw std::invalid_argument("probe: the gadget forces k = 2");
    const auto& g = installed.gadget;

    SequencedSet mirror;
    for (std::size_t i = 0; i < g.coords.size(); ++i)
        mirror.insert(UnitInterval{g.coords[i], installed.arrivals[i]});
    check_proper(mirror, colorer, "before the probe");

    Coloring before;
    for (std::int64_t a : installed.arrivals) before[a] = colorer.coloring().at(a);

    const int ck1 = before.at(installed.arrivals[g.k1_index]);
    const int ci1 = before.at(installed.arrivals[g.i1_index]);

    std::vector<std::pair<std::int64_t, Coord>> probes;
    if (ck1 == ci1) {
        for (const Coord& c : {g.probe_pair_first, g.probe_pair_second}) {
            std::int64_t a = colorer.insert(c);
            probes.emplace_back(a, c);
            mirror.insert(UnitInterval{c, a});
            check_proper(mirror, colorer, "after a probe insertion");
        }
    } else {
        std::int64_t a = colorer.insert(g.probe_single);
        probes.emplace_back(a, g.probe_single);
        mirror.insert(UnitInterval{g.probe_single, a});
        check_proper(mirror, colorer, "after a probe insertion");
    }

    int forced = 0;
    for (std::int64_t a : installed.arrivals)
        if (colorer.coloring().at(a) != before.at(a)) ++forced;

    for (const auto& [a, c] : probes) {
        colorer.erase(a);
        mirror.erase(UnitInterval{c, a});
        check_proper(mirror, colorer, "after a probe removal");
    }
    return forced;
}

}  // namespace uic::adversary
