#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace nonrep::cli
{
    /// Record of one invocation: enough to rerun it and check that the outputs match.
    class RunManifest
    {
    public:
        explicit RunManifest(std::vector<std::string> command_line);

        void set_seed(std::uint64_t seed) { _seed = seed; }

        /// Reads the file, hashes its bytes and returns them.
        auto read_input(const std::string & path) -> std::string;

        /// Writes text to path, or to `fallback` when path is empty, and records its hash.
        void write_output(const std::string & path, const std::string & text, std::ostream & fallback);

        [[nodiscard]] auto to_json(int exit_code) const -> nlohmann::json;

    private:
        struct Entry
        {
            std::string name;
            std::string sha256;
        };

        std::vector<std::string> _command_line;
        std::optional<std::uint64_t> _seed;
        std::vector<Entry> _inputs;
        std::vector<Entry> _outputs;
    };

    [[nodiscard]] auto sha256_hex(const std::string & bytes) -> std::string;
}
