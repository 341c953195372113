#include "modzeta/selector.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "modzeta/constructions.hpp"

namespace modzeta {

namespace {

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.emplace_back(s.substr(pos));
            break;
        }
        out.emplace_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
    std::uint64_t v = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range)
        throw std::out_of_range(std::string(what) + ": integer out of range: " + std::string(s));
    if (ec != std::errc() || p != last)
        throw std::invalid_argument(std::string(what) + ": bad integer: " + std::string(s));
    return v;
}

double parse_f64(std::string_view s, const char* what) {
    try {
        std::size_t used = 0;
        const std::string tmp(s);
        const double v = std::stod(tmp, &used);
        if (used != tmp.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument(std::string(what) + ": bad number: " + std::string(s));
    }
}

std::vector<std::uint64_t> parse_list(std::string_view body, const char* what) {
    std::vector<std::uint64_t> out;
    if (body.empty()) return out;
    for (const auto& tok : split(body, ',')) {
        if (tok.empty()) continue;
        out.push_back(parse_u64(tok, what));
    }
    return sorted_unique(std::move(out));
}

} // namespace

PrimeSelector PrimeSelector::all() {
    PrimeSelector s;
    s.kind_ = SelectorKind::All;
    return s;
}

PrimeSelector PrimeSelector::exclude(std::vector<std::uint64_t> primes) {
    PrimeSelector s;
    s.kind_ = SelectorKind::ExcludeList;
    s.list_ = sorted_unique(std::move(primes));
    return s;
}

PrimeSelector PrimeSelector::include(std::vector<std::uint64_t> primes) {
    PrimeSelector s;
    s.kind_ = SelectorKind::IncludeList;
    s.list_ = sorted_unique(std::move(primes));
    return s;
}

PrimeSelector PrimeSelector::residue_class(std::uint64_t a, std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("residue_class: modulus must be >= 2");
    PrimeSelector s;
    s.kind_ = SelectorKind::ResidueClass;
    s.residue_ = a % m;
    s.modulus_ = m;
    return s;
}

PrimeSelector PrimeSelector::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("selector file not readable: " + path);
    std::vector<std::uint64_t> ps;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comments and whitespace
        if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::string tok;
        std::istringstream ls(line);
        while (ls >> tok) {
            ps.push_back(parse_u64(tok, ("selector file " + path + ":" +
                                         std::to_string(lineno)).c_str()));
        }
    }
    PrimeSelector s;
    s.kind_ = SelectorKind::FromFile;
    s.list_ = sorted_unique(std::move(ps));
    s.path_ = path;
    return s;
}

PrimeSelector PrimeSelector::construction_6a(const Construction6aParams& p) {
    if (!(p.delta > 0.0 && p.delta < 1.0))
        throw std::invalid_argument("construction 6a: delta must lie in (0,1)");
    if (!(p.exponent_ratio > 1.0))
        throw std::invalid_argument(
            "construction 6a: exponent ratio must exceed 1 so that sum 1/log x_k "
            "is a convergent geometric series");
    if (!(p.base > 1.0)) throw std::invalid_argument("construction 6a: base must exceed 1");
    if (p.k_min > p.k_max) throw std::invalid_argument("construction 6a: k_min > k_max");
    PrimeSelector s;
    s.kind_ = SelectorKind::Construction6a;
    s.c6a_ = p;
    return s;
}

PrimeSelector PrimeSelector::construction_6b(const Construction6bParams& p) {
    if (p.k0 < 2) throw std::invalid_argument("construction 6b: k0 must be >= 2");
    // k_max < k0 is legal and selects nothing: P = {}, Q = all primes
    PrimeSelector s;
    s.kind_ = SelectorKind::Construction6b;
    s.c6b_ = p;
    return s;
}

PrimeSelector PrimeSelector::parse(std::string_view spec) {
    if (spec == "all") return all();
    if (spec.rfind("exclude:", 0) == 0)
        return exclude(parse_list(spec.substr(8), "exclude list"));
    if (spec.rfind("include:", 0) == 0)
        return include(parse_list(spec.substr(8), "include list"));
    if (spec == "none") return include({});
    if (spec.rfind("mod:", 0) == 0) {
        const auto parts = split(spec.substr(4), ',');
        if (parts.size() != 2) throw std::invalid_argument("mod selector wants mod:a,m");
        const auto a = parse_u64(parts[0], "mod residue");
        const auto m = parse_u64(parts[1], "mod modulus");
        return residue_class(a, m);
    }
    if (spec.rfind("file:", 0) == 0) return from_file(std::string(spec.substr(5)));
    if (spec.rfind("construct:6a:", 0) == 0 || spec == "construct:6a") {
        Construction6aParams p;
        if (spec.size() > 13) {
            for (const auto& kv : split(spec.substr(13), ',')) {
                if (kv.empty()) continue;
                const auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("construct:6a expects key=value: " + kv);
                const auto key = kv.substr(0, eq);
                const auto val = kv.substr(eq + 1);
                if (key == "delta") p.delta = parse_f64(val, "6a delta");
                else if (key == "base") p.base = parse_f64(val, "6a base");
                else if (key == "ratio") p.exponent_ratio = parse_f64(val, "6a ratio");
                else if (key == "kmin") p.k_min = static_cast<int>(parse_u64(val, "6a kmin"));
                else if (key == "kmax") p.k_max = static_cast<int>(parse_u64(val, "6a kmax"));
                else throw std::invalid_argument("construct:6a unknown key: " + key);
            }
        }
        return construction_6a(p);
    }
    if (spec.rfind("construct:6b:", 0) == 0 || spec == "construct:6b") {
        Construction6bParams p;
        if (spec.size() > 13) {
            for (const auto& kv : split(spec.substr(13), ',')) {
                if (kv.empty()) continue;
                if (kv == "cap") {
                    p.cap_small_quotas = true;
                    continue;
                }
                const auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("construct:6b expects key=value: " + kv);
                const auto key = kv.substr(0, eq);
                const auto val = kv.substr(eq + 1);
                if (key == "k0") p.k0 = static_cast<int>(parse_u64(val, "6b k0"));
                else if (key == "kmax") p.k_max = static_cast<int>(parse_u64(val, "6b kmax"));
                else throw std::invalid_argument("construct:6b unknown key: " + key);
            }
        }
        return construction_6b(p);
    }
    throw std::invalid_argument("unrecognized prime selector: " + std::string(spec));
}

std::string PrimeSelector::spec_string() const {
    auto join = [](const std::vector<std::uint64_t>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(v[i]);
        }
        return out;
    };
    std::ostringstream os;
    switch (kind_) {
        case SelectorKind::All: return "all";
        case SelectorKind::ExcludeList: return "exclude:" + join(list_);
        case SelectorKind::IncludeList: return "include:" + join(list_);
        case SelectorKind::ResidueClass:
            return "mod:" + std::to_string(residue_) + "," + std::to_string(modulus_);
        case SelectorKind::FromFile: return "file:" + path_;
        case SelectorKind::Construction6a:
            os << "construct:6a:delta=" << c6a_.delta << ",base=" << c6a_.base
               << ",ratio=" << c6a_.exponent_ratio << ",kmin=" << c6a_.k_min
               << ",kmax=" << c6a_.k_max;
            return os.str();
        case SelectorKind::Construction6b:
            os << "construct:6b:k0=" << c6b_.k0 << ",kmax=" << c6b_.k_max
               << (c6b_.cap_small_quotas ? ",cap" : "");
            return os.str();
    }
    return {};
}

std::vector<std::uint64_t> PrimeSelector::construction_removed(const PrimeSieve& sieve) const {
    if (kind_ == SelectorKind::Construction6a)
        return construction_6a_removed(c6a_, sieve, sieve.bound());
    return construction_6b_removed(c6b_, sieve, sieve.bound());
}

bool PrimeSelector::contains(std::uint64_t p, const PrimeSieve& sieve) const {
    if (!sieve.is_prime(p))
        throw std::invalid_argument("selector membership queried on non-prime " +
                                    std::to_string(p));
    switch (kind_) {
        case SelectorKind::All: return true;
        case SelectorKind::ExcludeList:
            return !std::binary_search(list_.begin(), list_.end(), p);
        case SelectorKind::IncludeList:
        case SelectorKind::FromFile:
            return std::binary_search(list_.begin(), list_.end(), p);
        case SelectorKind::ResidueClass: return p % modulus_ == residue_;
        case SelectorKind::Construction6a:
        case SelectorKind::Construction6b: {
            const auto removed = construction_removed(sieve);
            return !std::binary_search(removed.begin(), removed.end(), p);
        }
    }
    return false;
}

std::vector<std::uint64_t> PrimeSelector::selected(const PrimeSieve& sieve) const {
    const auto& ps = sieve.primes();
    std::vector<std::uint64_t> out;
    switch (kind_) {
        case SelectorKind::All: return ps;
        case SelectorKind::ExcludeList: {
            out.reserve(ps.size());
            std::set_difference(ps.begin(), ps.end(), list_.begin(), list_.end(),
                                std::back_inserter(out));
            return out;
        }
        case SelectorKind::IncludeList:
        case SelectorKind::FromFile: {
            for (auto p : list_) {
                if (p > sieve.bound()) break;
                if (!sieve.is_prime(p))
                    throw std::invalid_argument("selector lists non-prime " + std::to_string(p));
                out.push_back(p);
            }
            return out;
        }
        case SelectorKind::ResidueClass: {
            for (auto p : ps)
                if (p % modulus_ == residue_) out.push_back(p);
            return out;
        }
        case SelectorKind::Construction6a:
        case SelectorKind::Construction6b: {
            const auto removed = construction_removed(sieve);
            std::set_difference(ps.begin(), ps.end(), removed.begin(), removed.end(),
                                std::back_inserter(out));
            return out;
        }
    }
    return out;
}

std::vector<std::uint64_t> PrimeSelector::complement(const PrimeSieve& sieve) const {
    const auto& ps = sieve.primes();
    std::vector<std::uint64_t> out;
    switch (kind_) {
        case SelectorKind::All: return out;
        case SelectorKind::ExcludeList: {
            for (auto p : list_) {
                if (p > sieve.bound()) break;
                if (!sieve.is_prime(p))
                    throw std::invalid_argument("selector lists non-prime " + std::to_string(p));
                out.push_back(p);
            }
            return out;
        }
        case SelectorKind::IncludeList:
        case SelectorKind::FromFile: {
            std::vector<std::uint64_t> inc;
            for (auto p : list_) {
                if (p > sieve.bound()) break;
                if (!sieve.is_prime(p))
                    throw std::invalid_argument("selector lists non-prime " + std::to_string(p));
                inc.push_back(p);
            }
            std::set_difference(ps.begin(), ps.end(), inc.begin(), inc.end(),
                                std::back_inserter(out));
            return out;
        }
        case SelectorKind::ResidueClass: {
            for (auto p : ps)
                if (p % modulus_ != residue_) out.push_back(p);
            return out;
        }
        case SelectorKind::Construction6a:
        case SelectorKind::Construction6b:
            return construction_removed(sieve);
    }
    return out;
}

std::optional<std::uint64_t> PrimeSelector::complement_support_bound() const {
    switch (kind_) {
        case SelectorKind::All: return 0;
        case SelectorKind::ExcludeList: return list_.empty() ? 0 : list_.back();
        case SelectorKind::Construction6a: {
            // last interval end x_{kmax} = base^(ratio^kmax); may overflow desk
            // scale, in which case materialization truncates anyway
            const double e = std::pow(c6a_.exponent_ratio, static_cast<double>(c6a_.k_max));
            const double x = std::pow(c6a_.base, e);
            if (x >= 1.8e19) return std::nullopt;
            return static_cast<std::uint64_t>(std::ceil(x));
        }
        default: return std::nullopt;
    }
}

} // namespace modzeta
