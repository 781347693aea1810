#include "fdtc/braid.hpp"

#include <cctype>
#include <sstream>

namespace fdtc {

namespace {

std::vector<Letter> free_reduce(const std::vector<Letter>& letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (const Letter& l : letters) {
        if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

} // namespace

BraidWord::BraidWord(int strands, std::vector<Letter> letters) : strands_(strands) {
    if (strands < 1)
        throw DegenerateStrandsError("strand count must be at least 1, got " +
                                     std::to_string(strands));
    for (const Letter& l : letters) {
        if (l.sign != 1 && l.sign != -1)
            throw InternalError("letter sign must be +1 or -1");
        if (l.index < 1 || l.index > strands - 1)
            throw IndexOutOfRangeError("generator index " + std::to_string(l.index) +
                                       " not in 1.." + std::to_string(strands - 1) +
                                       " for " + std::to_string(strands) + " strands");
    }
    letters_ = free_reduce(letters);
}

BraidWord parse_braid(const std::string& text, int strands) {
    if (strands < 1)
        throw DegenerateStrandsError("strand count must be at least 1, got " +
                                     std::to_string(strands));
    std::vector<Letter> letters;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::string body = tok;
        int sign = 1;
        if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
            if (body[0] == '-') sign = -1;
            body.erase(0, 1);
        }
        if (!body.empty() && (body[0] == 's' || body[0] == 'S')) body.erase(0, 1);
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
            throw SyntaxError("malformed generator token '" + tok + "'");
        if (body.size() > 6)
            throw SyntaxError("generator token '" + tok + "' is absurdly large");
        int index = std::stoi(body);
        if (index == 0)
            throw SyntaxError("'" + tok + "' does not name a generator (index 0)");
        if (index > strands - 1)
            throw IndexOutOfRangeError("token '" + tok + "' indexes generator " +
                                       std::to_string(index) + " but only 1.." +
                                       std::to_string(strands - 1) + " exist on " +
                                       std::to_string(strands) + " strands");
        letters.push_back(Letter{index, sign});
    }
    return BraidWord(strands, std::move(letters));
}

std::string to_string(const BraidWord& w) {
    std::string out;
    for (const Letter& l : w.letters()) {
        if (!out.empty()) out += ' ';
        if (l.sign < 0) out += '-';
        out += 's';
        out += std::to_string(l.index);
    }
    return out;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw StrandMismatchError("composing words on " + std::to_string(a.strands()) +
                                  " and " + std::to_string(b.strands()) + " strands");
    std::vector<Letter> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.strands(), std::move(letters));
}

BraidWord invert(const BraidWord& w) {
    std::vector<Letter> letters;
    letters.reserve(w.letters().size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        letters.push_back(Letter{it->index, -it->sign});
    return BraidWord(w.strands(), std::move(letters));
}

BraidWord power(const BraidWord& w, std::int64_t k) {
    const BraidWord base = k < 0 ? invert(w) : w;
    std::int64_t reps = k < 0 ? -k : k;
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(reps) * base.letters().size());
    for (std::int64_t i = 0; i < reps; ++i)
        letters.insert(letters.end(), base.letters().begin(), base.letters().end());
    return BraidWord(w.strands(), std::move(letters));
}

BraidWord full_twist(int strands) {
    if (strands < 2)
        throw DegenerateStrandsError("full twist needs at least 2 strands, got " +
                                     std::to_string(strands));
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(strands) * (strands - 1));
    for (int rep = 0; rep < strands; ++rep)
        for (int i = 1; i < strands; ++i)
            letters.push_back(Letter{i, 1});
    return BraidWord(strands, std::move(letters));
}

Permutation strand_permutation(const BraidWord& w) {
    std::vector<int> image(w.strands());
    for (int i = 0; i < w.strands(); ++i) image[i] = i;
    for (const Letter& l : w.letters())
        std::swap(image[l.index - 1], image[l.index]);
    return Permutation::from_image(std::move(image));
}

int component_count(const BraidWord& w) {
    return strand_permutation(w).cycle_count();
}

std::int64_t exponent_sum(const BraidWord& w) {
    std::int64_t sum = 0;
    for (const Letter& l : w.letters()) sum += l.sign;
    return sum;
}

} // namespace fdtc
