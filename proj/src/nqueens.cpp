#include "ebfs/nqueens.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>

namespace ebfs::nqueens {

bool attacks(Square a, Square b) {
    if (a == b) return false;
    return a.row == b.row || a.col == b.col || std::abs(a.row - b.row) == std::abs(a.col - b.col);
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

Board::Board(int n, std::vector<Square> queens) : n_(n), queens_(std::move(queens)) {
    if (n_ < 1) throw std::invalid_argument("board size must be positive");
    for (const Square& q : queens_) {
        if (q.row < 0 || q.row >= n_ || q.col < 0 || q.col >= n_)
            throw std::out_of_range("queen outside the board");
    }
    std::sort(queens_.begin(), queens_.end());
    if (std::adjacent_find(queens_.begin(), queens_.end()) != queens_.end())
        throw std::invalid_argument("duplicate queen");
    if (queens_.size() > static_cast<std::size_t>(n_)) throw std::invalid_argument("more than n queens");
}

bool Board::occupied(Square sq) const { return std::binary_search(queens_.begin(), queens_.end(), sq); }

bool Board::attacked(Square sq) const {
    return std::any_of(queens_.begin(), queens_.end(), [&](Square q) { return attacks(q, sq); });
}

bool Board::is_safe() const {
    for (std::size_t i = 0; i < queens_.size(); ++i)
        for (std::size_t j = i + 1; j < queens_.size(); ++j)
            if (attacks(queens_[i], queens_[j])) return false;
    return true;
}

bool Board::is_subset_of(const Board& other) const {
    return n_ == other.n_ && std::includes(other.queens_.begin(), other.queens_.end(), queens_.begin(), queens_.end());
}

Board Board::with_queen(Square sq) const {
    if (sq.row < 0 || sq.row >= n_ || sq.col < 0 || sq.col >= n_) throw std::out_of_range("queen outside the board");
    Board out = *this;
    auto at = std::lower_bound(out.queens_.begin(), out.queens_.end(), sq);
    if (at != out.queens_.end() && *at == sq) throw std::invalid_argument("square already occupied");
    out.queens_.insert(at, sq);
    return out;
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ == text_.size(); }

    int number(const char* what) {
        if (done() || text_[pos_] == '-') throw ParseError(std::string("expected ") + what, pos_);
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        const auto consumed = static_cast<std::size_t>(ptr - (text_.data() + pos_));
        if (consumed == 0) throw ParseError(std::string("expected ") + what, pos_);
        if (ec != std::errc{}) throw ParseError(std::string(what) + " out of range", pos_);
        pos_ += consumed;
        return value;
    }

    void expect(char c) {
        if (done() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    bool accept(char c) {
        if (done() || text_[pos_] != c) return false;
        ++pos_;
        return true;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Board parse_board(std::string_view text) {
    Cursor in(text);
    const int n = in.number("board size");
    if (n < 1) throw ParseError("board size must be positive", 0);
    in.expect(':');
    std::vector<Square> queens;
    if (!in.done()) {
        do {
            const std::size_t at = in.pos();
            Square sq;
            sq.row = in.number("row");
            in.expect(',');
            sq.col = in.number("column");
            if (sq.row >= n || sq.col >= n) throw ParseError("coordinate outside the board", at);
            if (std::find(queens.begin(), queens.end(), sq) != queens.end())
                throw ParseError("duplicate coordinate", at);
            queens.push_back(sq);
        } while (in.accept(';'));
        if (!in.done()) throw ParseError("unexpected character", in.pos());
    }
    if (queens.size() > static_cast<std::size_t>(n)) throw ParseError("more than n queens", text.size());
    return Board(n, std::move(queens));
}

std::string format_board(const Board& board) {
    std::string out = std::to_string(board.n()) + ":";
    bool first = true;
    for (const Square& q : board.queens()) {
        if (!first) out += ';';
        first = false;
        out += std::to_string(q.row) + "," + std::to_string(q.col);
    }
    return out;
}

std::vector<Board> KnownStateSpec::states() const {
    std::vector<Board> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.state);
    return out;
}

bool is_goal(const Board& board) {
    return board.queen_count() == static_cast<std::size_t>(board.n()) && board.is_safe();
}

Representation<Board> nqueens_rep(int n, const KnownStateSpec& known) {
    if (n < 1) throw ModelError("board size must be positive");
    if (known.entries.empty()) throw ModelError("no known states given");
    for (const auto& e : known.entries) {
        if (e.state.n() != n)
            throw ModelError("known state " + format_board(e.state) + " is not a " + std::to_string(n) + "-board");
        if (!e.state.is_safe())
            throw ModelError("known state " + format_board(e.state) + " has attacking queens");
    }

    std::vector<Representation<Board>::SetFunction> forward;
    forward.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            forward.emplace_back([sq = Square{r, c}](const Board& s) -> std::vector<Board> {
                if (s.occupied(sq) || s.attacked(sq)) return {};
                return {s.with_queen(sq)};
            });
        }
    }
    return Representation<Board>(
        known.states(), [](const Board& s) { return s.queen_count() == 0; }, [](const Board& s) { return is_goal(s); },
        std::move(forward));
}

namespace {

bool first_solution(int n, int row, std::vector<Square>& placed) {
    if (row == n) return true;
    for (int c = 0; c < n; ++c) {
        const Square sq{row, c};
        if (std::any_of(placed.begin(), placed.end(), [&](Square q) { return attacks(q, sq); })) continue;
        placed.push_back(sq);
        if (first_solution(n, row + 1, placed)) return true;
        placed.pop_back();
    }
    return false;
}

// Combinations of `count` squares in lexicographic (row, col) order,
// pruned to safe placements; stops at the first accepted one.
template <class Accept>
bool first_safe_placement(int n, std::size_t count, int next_index, std::vector<Square>& chosen,
                          const Accept& accept) {
    if (chosen.size() == count) return accept(chosen);
    for (int idx = next_index; idx < n * n; ++idx) {
        const Square sq{idx / n, idx % n};
        if (std::any_of(chosen.begin(), chosen.end(), [&](Square q) { return attacks(q, sq); })) continue;
        chosen.push_back(sq);
        if (first_safe_placement(n, count, idx + 1, chosen, accept)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

Board on_solution_state(int n, int depth) {
    if (n < 1) throw std::invalid_argument("board size must be positive");
    if (depth < 1 || depth > n) throw std::invalid_argument("solution prefix depth must be in [1, n]");
    std::vector<Square> placed;
    if (!first_solution(n, 0, placed)) throw std::domain_error(std::to_string(n) + "-queens has no solution");
    placed.resize(static_cast<std::size_t>(depth));
    return Board(n, std::move(placed));
}

Board false_heuristic_state(int n, const Board& other) {
    if (other.n() != n) throw std::invalid_argument("reference state has a different board size");
    if (!other.is_safe()) throw std::invalid_argument("reference state has attacking queens");
    std::vector<Square> chosen;
    std::optional<Board> found;
    first_safe_placement(n, other.queen_count(), 0, chosen, [&](const std::vector<Square>& q) {
        Board candidate(n, q);
        if (candidate.is_subset_of(other) || other.is_subset_of(candidate)) return false;
        found = std::move(candidate);
        return true;
    });
    if (!found) throw std::domain_error("no placement incomparable with " + format_board(other));
    return *found;
}

std::size_t hash_value(const Board& b) noexcept {
    // FNV-1a over the board size and the sorted coordinates.
    std::size_t h = 1469598103934665603ull;
    auto mix = [&](int v) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ull;
    };
    mix(b.n());
    for (const auto& q : b.queens()) {
        mix(q.row);
        mix(q.col);
    }
    return h;
}

}  // namespace ebfs::nqueens
