#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ebfs/essm.hpp"
#include "ebfs/state.hpp"

namespace ebfs::nqueens {

struct Square {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Square&, const Square&) = default;
};

/// Two distinct squares share a row, column or diagonal.
bool attacks(Square a, Square b);

/// Malformed state text; position is the 0-based offset of the problem.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/*
  A partial queen placement on an n x n board, equivalent to the Boolean
  matrix with true on occupied squares. Queens are kept sorted by
  (row, col), so equal placements have equal representations regardless
  of the order queens were placed in.
*/
class Board {
public:
    explicit Board(int n, std::vector<Square> queens = {});

    int n() const { return n_; }
    const std::vector<Square>& queens() const { return queens_; }
    std::size_t queen_count() const { return queens_.size(); }

    bool occupied(Square sq) const;
    /// Some queen on the board attacks sq.
    bool attacked(Square sq) const;
    /// No two queens attack each other.
    bool is_safe() const;
    bool is_subset_of(const Board& other) const;

    /// Copy with one more queen; sq must be on the board and empty.
    Board with_queen(Square sq) const;

    friend bool operator==(const Board&, const Board&) = default;

private:
    int n_;
    std::vector<Square> queens_;
};

/// Grammar: <n> ":" [ <r> "," <c> ( ";" <r> "," <c> )* ], decimal, no whitespace.
Board parse_board(std::string_view text);
/// Canonical text, queens in (row, col) order.
std::string format_board(const Board& board);

std::size_t hash_value(const Board& board) noexcept;

}  // namespace ebfs::nqueens

template <>
struct std::hash<ebfs::nqueens::Board> {
    std::size_t operator()(const ebfs::nqueens::Board& b) const noexcept { return ebfs::nqueens::hash_value(b); }
};

template <>
struct ebfs::StateTraits<ebfs::nqueens::Board> {
    static std::string format(const ebfs::nqueens::Board& b) { return ebfs::nqueens::format_board(b); }
    static ebfs::nqueens::Board parse(std::string_view text) { return ebfs::nqueens::parse_board(text); }
};

namespace ebfs::nqueens {

struct KnownStateSpec {
    enum class Role { initial, on_solution, false_heuristic, given };
    struct Entry {
        Board state;
        Role role;
    };
    std::vector<Entry> entries;

    std::vector<Board> states() const;
};

/*
  n-queens with one forward function per square. f_(r,c) places a queen on
  (r,c) if the square is empty and not attacked by any placed queen;
  otherwise it is not applicable. Queens are never removed, so the space
  is a DAG layered by queen count and B is empty.

  initial: the empty board. goal: n mutually non-attacking queens.
  Forward function index is r * n + c.
*/
Representation<Board> nqueens_rep(int n, const KnownStateSpec& known);

bool is_goal(const Board& board);

/// First `depth` queens, in row order, of the first complete solution
/// found by backtracking rows 0..n-1 and columns 0..n-1.
Board on_solution_state(int n, int depth);

/// Lexicographically first safe placement with as many queens as `other`
/// that is neither a subset nor a superset of it, so that neither state is
/// reachable from the other.
Board false_heuristic_state(int n, const Board& other);

}  // namespace ebfs::nqueens
