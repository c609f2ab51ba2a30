#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hinv {

inline bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

// The ambient variable set: n cyclic coordinates x0..x{n-1} plus an ordered
// list of named parameters. Coordinates are polynomial; parameters are
// Laurent (negative exponents allowed). State is shared and immutable, so
// copies are cheap even with very large parameter lists.
class VarSpace {
public:
    VarSpace() : VarSpace(2, {}) {}

    VarSpace(int n, std::vector<std::string> params)
        : impl_(std::make_shared<const Impl>(n, std::move(params))) {}

    int n() const { return impl_->n; }
    const std::vector<std::string>& params() const { return impl_->params; }
    int param_count() const { return static_cast<int>(impl_->params.size()); }

    // Index of a parameter name, or -1 when absent.
    int param_index(std::string_view name) const {
        auto it = impl_->index.find(std::string(name));
        return it == impl_->index.end() ? -1 : it->second;
    }

    // Coordinate index for names of the exact form x<k> with 0 <= k < n, else -1.
    int coord_of(std::string_view name) const {
        if (name.size() < 2 || name[0] != 'x') return -1;
        long v = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            char c = name[i];
            if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
            v = v * 10 + (c - '0');
            if (v > 1000000) return -1;
        }
        if (name.size() > 2 && name[1] == '0') return -1;  // no leading zeros
        return v < impl_->n ? static_cast<int>(v) : -1;
    }

    bool operator==(const VarSpace& o) const {
        if (impl_ == o.impl_) return true;
        return impl_->n == o.impl_->n && impl_->params == o.impl_->params;
    }

private:
    struct Impl {
        int n;
        std::vector<std::string> params;
        std::unordered_map<std::string, int> index;

        Impl(int n_in, std::vector<std::string> params_in)
            : n(n_in), params(std::move(params_in)) {
            if (n < 2) throw std::invalid_argument("VarSpace needs n >= 2 coordinates");
            index.reserve(params.size());
            for (std::size_t i = 0; i < params.size(); ++i) {
                const auto& p = params[i];
                if (!is_identifier(p)) throw std::invalid_argument("bad parameter name: " + p);
                if (!index.emplace(p, static_cast<int>(i)).second)
                    throw std::invalid_argument("duplicate parameter name: " + p);
            }
            // validate coordinate collisions after n is known
            for (const auto& p : params)
                if (coord_like(p, n))
                    throw std::invalid_argument("parameter name collides with coordinate: " + p);
        }

        static bool coord_like(std::string_view name, int n) {
            if (name.size() < 2 || name[0] != 'x') return false;
            long v = 0;
            for (std::size_t i = 1; i < name.size(); ++i) {
                char c = name[i];
                if (!std::isdigit(static_cast<unsigned char>(c))) return false;
                v = v * 10 + (c - '0');
                if (v > 1000000) return false;
            }
            if (name.size() > 2 && name[1] == '0') return false;
            return v < n;
        }
    };

    std::shared_ptr<const Impl> impl_;
};

inline void require_same_space(const VarSpace& a, const VarSpace& b) {
    if (!(a == b)) throw std::invalid_argument("VarSpace mismatch");
}

}  // namespace hinv
