#include "manifest.hpp"

#include <nonrep/graph.hpp>
#include <nonrep/version.hpp>

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace nonrep::cli
{
    auto sha256_hex(const std::string & bytes) -> std::string
    {
        std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
        unsigned int length = 0;
        EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr);
        std::ostringstream out;
        for (unsigned int i = 0; i < length; ++i)
            out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
        return out.str();
    }

    RunManifest::RunManifest(std::vector<std::string> command_line) :
        _command_line(std::move(command_line))
    {
    }

    auto RunManifest::read_input(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw InvalidInput("cannot open " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        auto bytes = buffer.str();
        _inputs.push_back({path, sha256_hex(bytes)});
        return bytes;
    }

    void RunManifest::write_output(const std::string & path, const std::string & text, std::ostream & fallback)
    {
        if (path.empty() || path == "-") {
            fallback << text;
            fallback.flush();
            _outputs.push_back({"-", sha256_hex(text)});
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw InvalidInput("cannot write " + path);
        out << text;
        _outputs.push_back({path, sha256_hex(text)});
    }

    auto RunManifest::to_json(int exit_code) const -> nlohmann::json
    {
        auto entries = [](const std::vector<Entry> & list) {
            auto out = nlohmann::json::array();
            for (auto & e : list)
                out.push_back({{"name", e.name}, {"sha256", e.sha256}});
            return out;
        };
        nlohmann::json seed = nullptr;
        if (_seed)
            seed = *_seed;
        return {{"command", _command_line}, {"seed", seed}, {"version", std::string(version)},
            {"inputs", entries(_inputs)}, {"outputs", entries(_outputs)}, {"exit_code", exit_code}};
    }
}
