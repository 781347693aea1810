#include "fdtc/dehornoy.hpp"

#include <algorithm>

namespace fdtc {

namespace {

void free_reduce_inplace(std::vector<Letter>& word) {
    std::size_t top = 0;
    for (std::size_t p = 0; p < word.size(); ++p) {
        if (top > 0 && word[top - 1].index == word[p].index &&
            word[top - 1].sign == -word[p].sign) {
            --top;
        } else {
            word[top++] = word[p];
        }
    }
    word.resize(top);
}

struct Handle {
    int start = -1;
    int end = -1;
};

// Finds the handle that closes leftmost. A handle at index i is a pair of
// sigma_i occurrences with opposite signs and no letter of index <= i in
// between; a letter of smaller index between two sigma_i occurrences
// disqualifies the pair, which the scan tracks by invalidating the
// remembered occurrence of every larger index. Choosing the leftmost
// closing handle matters: any handle nested in its interior would close
// even earlier, so the returned handle has none, its interior sigma_{i+1}
// letters all share one sign, and repeated reduction terminates. Rewriting
// an outer handle around a nested one instead can regenerate itself
// forever.
bool find_handle(const std::vector<Letter>& word, int strands, Handle& out, int& out_index) {
    const int gens = strands - 1;
    std::vector<int> last(gens + 1, -1);
    for (int p = 0; p < static_cast<int>(word.size()); ++p) {
        const int i = word[p].index;
        for (int j = i + 1; j <= gens; ++j) last[j] = -1;
        if (last[i] >= 0 && word[last[i]].sign == -word[p].sign) {
            out.start = last[i];
            out.end = p;
            out_index = i;
            return true;
        }
        last[i] = p;
    }
    return false;
}

} // namespace

BraidWord handle_reduce(const BraidWord& w, long long budget) {
    std::vector<Letter> word = w.letters();
    long long steps = 0;
    Handle h;
    int index = 0;
    while (find_handle(word, w.strands(), h, index)) {
        if (++steps > budget)
            throw BudgetExceededError("handle reduction exceeded budget of " +
                                      std::to_string(budget) + " steps");
        const int flank_sign = word[h.start].sign;
        std::vector<Letter> next;
        next.reserve(word.size() + 4);
        next.insert(next.end(), word.begin(), word.begin() + h.start);
        for (int q = h.start + 1; q < h.end; ++q) {
            const Letter& l = word[q];
            if (l.index == index + 1) {
                next.push_back(Letter{index + 1, -flank_sign});
                next.push_back(Letter{index, l.sign});
                next.push_back(Letter{index + 1, flank_sign});
            } else {
                next.push_back(l);
            }
        }
        next.insert(next.end(), word.begin() + h.end + 1, word.end());
        free_reduce_inplace(next);
        word = std::move(next);
    }
    return BraidWord(w.strands(), std::move(word));
}

SigmaClass sigma_class(const BraidWord& w, long long budget) {
    const BraidWord r = handle_reduce(w, budget);
    if (r.empty()) return SigmaClass::trivial;
    int min_index = r.letters().front().index;
    for (const Letter& l : r.letters()) min_index = std::min(min_index, l.index);
    int sign = 0;
    for (const Letter& l : r.letters()) {
        if (l.index != min_index) continue;
        if (sign == 0) sign = l.sign;
        else if (sign != l.sign)
            throw InternalError("handle free word has mixed signs at its minimal index");
    }
    return sign > 0 ? SigmaClass::sigma_positive : SigmaClass::sigma_negative;
}

Order compare(const BraidWord& a, const BraidWord& b, long long budget) {
    if (a.strands() != b.strands())
        throw StrandMismatchError("comparing words on " + std::to_string(a.strands()) +
                                  " and " + std::to_string(b.strands()) + " strands");
    switch (sigma_class(compose(invert(a), b), budget)) {
        case SigmaClass::sigma_positive: return Order::less;
        case SigmaClass::sigma_negative: return Order::greater;
        case SigmaClass::trivial: return Order::equal;
    }
    throw InternalError("unreachable sigma class");
}

bool is_trivial(const BraidWord& w, long long budget) {
    return sigma_class(w, budget) == SigmaClass::trivial;
}

} // namespace fdtc
