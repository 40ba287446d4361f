#include "rk/cache.hpp"

#include <cstring>
#include <fstream>
#include <random>
#include <sstream>

#include <openssl/evp.h>

namespace rk {

std::string sha256Hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir))
{
    std::filesystem::create_directories(dir_);
}

std::optional<std::string> Cache::get(const std::string& key) const
{
    const auto path = dir_ / key;
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void Cache::put(const std::string& key, const std::string& bytes) const
{
    static std::mt19937_64 rng(std::random_device{}());
    const auto tmp = dir_ / (key + ".tmp" + std::to_string(rng()));
    {
        std::ofstream out(tmp, std::ios::binary);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    }
    std::filesystem::rename(tmp, dir_ / key);
}

namespace {

void putU32(std::string& out, std::uint32_t v)
{
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

bool getU32(const std::string& in, size_t& pos, std::uint32_t& v)
{
    if (pos + 4 > in.size()) return false;
    v = 0;
    for (int i = 0; i < 4; ++i)
        v |= static_cast<std::uint32_t>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
    pos += 4;
    return true;
}

}  // namespace

std::string encodeSubspaceRecord(const Subspace<Rational>& s)
{
    std::string out = "RKSV1";
    putU32(out, static_cast<std::uint32_t>(s.ambientDim()));
    putU32(out, static_cast<std::uint32_t>(s.dim()));
    for (int r = 0; r < s.dim(); ++r) {
        std::uint32_t count = 0;
        for (int c = 0; c < s.ambientDim(); ++c)
            if (s.basis()(r, c) != Rational(0)) ++count;
        putU32(out, count);
        for (int c = 0; c < s.ambientDim(); ++c) {
            const Rational& x = s.basis()(r, c);
            if (x == Rational(0)) continue;
            putU32(out, static_cast<std::uint32_t>(c));
            const std::string repr = toString(x);
            putU32(out, static_cast<std::uint32_t>(repr.size()));
            out += repr;
        }
    }
    return out;
}

std::optional<Subspace<Rational>> decodeSubspaceRecord(const std::string& bytes)
{
    if (bytes.size() < 5 || bytes.compare(0, 5, "RKSV1") != 0) return std::nullopt;
    size_t pos = 5;
    std::uint32_t ambient = 0, rows = 0;
    if (!getU32(bytes, pos, ambient) || !getU32(bytes, pos, rows)) return std::nullopt;
    MatrixX<Rational> m(rows, ambient);
    m.setZero();
    for (std::uint32_t r = 0; r < rows; ++r) {
        std::uint32_t count = 0;
        if (!getU32(bytes, pos, count)) return std::nullopt;
        for (std::uint32_t k = 0; k < count; ++k) {
            std::uint32_t col = 0, len = 0;
            if (!getU32(bytes, pos, col) || !getU32(bytes, pos, len)) return std::nullopt;
            if (pos + len > bytes.size() || col >= ambient) return std::nullopt;
            m(r, col) = parseRational(bytes.substr(pos, len));
            pos += len;
        }
    }
    return Subspace<Rational>::span(m);
}

}  // namespace rk
