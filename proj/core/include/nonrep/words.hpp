#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nonrep
{
    /// Finite word over {1, ..., alphabet_size}.
    class Word
    {
    public:
        Word() = default;

        /// Throws InvalidInput when a symbol lies outside the alphabet.
        Word(int alphabet_size, std::vector<std::uint8_t> symbols);

        /// Parses a digit string such as "12312".
        [[nodiscard]] static auto parse(std::string_view digits, int alphabet_size) -> Word;

        [[nodiscard]] auto alphabet_size() const noexcept -> int { return _alphabet; }
        [[nodiscard]] auto symbols() const noexcept -> const std::vector<std::uint8_t> & { return _symbols; }
        [[nodiscard]] auto size() const noexcept -> std::size_t { return _symbols.size(); }
        [[nodiscard]] auto operator[](std::size_t i) const -> int { return _symbols[i]; }

        [[nodiscard]] auto str() const -> std::string;

        /// Symbols as colour ids, one per position.
        [[nodiscard]] auto as_colours() const -> std::vector<int>;

        auto operator==(const Word & other) const -> bool = default;

    private:
        int _alphabet = 3;
        std::vector<std::uint8_t> _symbols;
    };

    struct Square
    {
        std::size_t start;
        std::size_t half_length;

        auto operator==(const Square & other) const -> bool = default;
    };

    /// Image under 1 -> 12312, 2 -> 131232, 3 -> 1323132. Requires a ternary word.
    [[nodiscard]] auto thue_expand(const Word & w) -> Word;

    /// Prefix of length len of the fixed point of thue_expand seeded with "1".
    [[nodiscard]] auto thue_word(std::size_t len) -> Word;

    /// Splits w into consecutive blocks of two (the last may be a single symbol) and
    /// joins them with the separator 4.
    [[nodiscard]] auto kp_insert(const Word & w) -> Word;

    /// Prefix of length len of kp_insert applied to the Thue fixed point.
    [[nodiscard]] auto kp_word(std::size_t len) -> Word;

    /// Leftmost square factor xx; among squares at that start, the shortest.
    [[nodiscard]] auto find_square(std::span<const std::uint8_t> symbols) -> std::optional<Square>;
    [[nodiscard]] auto find_square(const Word & w) -> std::optional<Square>;

    /// Same contract as find_square for any integer sequence (e.g. colour sequences).
    [[nodiscard]] auto find_square(std::span<const int> symbols) -> std::optional<Square>;
}
