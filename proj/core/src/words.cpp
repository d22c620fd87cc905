#include <nonrep/graph.hpp>
#include <nonrep/words.hpp>

#include <array>

using std::vector;

namespace nonrep
{
    namespace
    {
        const std::array<std::string_view, 3> thue_images{"12312", "131232", "1323132"};

        template <typename T>
        auto leftmost_square(std::span<const T> w) -> std::optional<Square>
        {
            std::size_t n = w.size();
            std::optional<Square> best;
            for (std::size_t h = 1; 2 * h <= n; ++h) {
                // A square with half h starting at s ends its run of matches w[i] == w[i + h] at i = s + h - 1.
                std::size_t limit = n - h;
                if (best)
                    limit = std::min(limit, best->start + h - 1);
                std::size_t run = 0;
                for (std::size_t i = 0; i < limit; ++i) {
                    run = (w[i] == w[i + h]) ? run + 1 : 0;
                    if (run == h) {
                        best = Square{i + 1 - h, h};
                        break;
                    }
                }
            }
            return best;
        }
    }

    Word::Word(int alphabet_size, vector<std::uint8_t> symbols) :
        _alphabet(alphabet_size), _symbols(std::move(symbols))
    {
        if (alphabet_size < 1)
            throw InvalidInput("alphabet must be non-empty");
        for (auto s : _symbols)
            if (s < 1 || s > alphabet_size)
                throw InvalidInput("symbol " + std::to_string(int(s)) + " outside alphabet {1.."
                    + std::to_string(alphabet_size) + "}");
    }

    auto Word::parse(std::string_view digits, int alphabet_size) -> Word
    {
        vector<std::uint8_t> symbols;
        symbols.reserve(digits.size());
        for (char ch : digits) {
            if (ch < '0' || ch > '9')
                throw InvalidInput(std::string("non-digit symbol '") + ch + "'");
            symbols.push_back(std::uint8_t(ch - '0'));
        }
        return Word(alphabet_size, std::move(symbols));
    }

    auto Word::str() const -> std::string
    {
        std::string result;
        result.reserve(_symbols.size());
        for (auto s : _symbols)
            result.push_back(char('0' + s));
        return result;
    }

    auto Word::as_colours() const -> vector<int>
    {
        return {_symbols.begin(), _symbols.end()};
    }

    auto thue_expand(const Word & w) -> Word
    {
        if (w.alphabet_size() != 3)
            throw InvalidInput("thue_expand needs a word over {1,2,3}");
        vector<std::uint8_t> out;
        out.reserve(w.size() * 6);
        for (auto s : w.symbols())
            for (char ch : thue_images[s - 1])
                out.push_back(std::uint8_t(ch - '0'));
        return Word(3, std::move(out));
    }

    auto thue_word(std::size_t len) -> Word
    {
        Word w(3, {1});
        while (w.size() < len)
            w = thue_expand(w);
        auto symbols = w.symbols();
        symbols.resize(len);
        return Word(3, std::move(symbols));
    }

    auto kp_insert(const Word & w) -> Word
    {
        vector<std::uint8_t> out;
        out.reserve(w.size() + w.size() / 2);
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i > 0 && i % 2 == 0)
                out.push_back(4);
            out.push_back(w.symbols()[i]);
        }
        return Word(4, std::move(out));
    }

    auto kp_word(std::size_t len) -> Word
    {
        auto symbols = kp_insert(thue_word(len)).symbols();
        symbols.resize(len);
        return Word(4, std::move(symbols));
    }

    auto find_square(std::span<const std::uint8_t> symbols) -> std::optional<Square>
    {
        return leftmost_square(symbols);
    }

    auto find_square(const Word & w) -> std::optional<Square>
    {
        return leftmost_square(std::span<const std::uint8_t>(w.symbols()));
    }

    auto find_square(std::span<const int> symbols) -> std::optional<Square>
    {
        return leftmost_square(symbols);
    }
}
