#include "sic/ray.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace sic {

std::vector<QuadScalar> canonicalize(std::span<const QuadScalar> components)
{
    const auto lead = std::find_if(components.begin(), components.end(),
                                   [](const QuadScalar& x) { return !x.is_zero(); });
    if (lead == components.end())
        throw std::invalid_argument("zero ray");

    const QuadScalar scale = lead->inverse();
    std::vector<QuadScalar> out;
    out.reserve(components.size());
    for (const auto& x : components)
        out.push_back(x * scale);
    return out;
}

Ray::Ray(std::vector<QuadScalar> components)
    : components_(canonicalize(components))
{
}

QuadScalar inner_product(const Ray& u, const Ray& v)
{
    if (u.dim() != v.dim())
        throw std::invalid_argument("inner product of rays with dimensions " + std::to_string(u.dim())
                                    + " and " + std::to_string(v.dim()));
    QuadScalar sum;
    for (std::size_t k = 0; k < u.dim(); ++k)
        sum += u[k].conj() * v[k];
    return sum;
}

bool is_orthogonal(const Ray& u, const Ray& v)
{
    return inner_product(u, v).is_zero();
}

RaySet::RaySet(std::size_t dim, std::int64_t sqrt_base)
    : dim_(dim)
    , sqrt_base_(sqrt_base)
{
    if (dim == 0)
        throw std::invalid_argument("dimension must be positive");
    if (!is_square_free(sqrt_base))
        throw std::invalid_argument("sqrt base " + std::to_string(sqrt_base) + " is not square-free");
}

bool RaySet::add(Ray ray, DedupPolicy policy)
{
    if (ray.dim() != dim_)
        throw std::invalid_argument("ray has " + std::to_string(ray.dim()) + " components, expected "
                                    + std::to_string(dim_));
    for (const auto& x : ray.components()) {
        if (x.has_surd() && x.base() != sqrt_base_)
            throw std::invalid_argument("component " + x.to_string() + " uses sqrt("
                                        + std::to_string(x.base()) + ") in a sqrt("
                                        + std::to_string(sqrt_base_) + ") set");
    }
    if (std::find(rays_.begin(), rays_.end(), ray) != rays_.end()) {
        if (policy == DedupPolicy::reject)
            throw std::invalid_argument("duplicate ray");
        return false;
    }
    rays_.push_back(std::move(ray));
    return true;
}

RaySet RaySet::subset(std::span<const std::size_t> indices) const
{
    RaySet out(dim_, sqrt_base_);
    for (std::size_t i : indices)
        out.rays_.push_back(rays_.at(i));
    return out;
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": "
                         + message)
    , line_(line)
    , column_(column)
{
}

namespace {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

std::vector<Token> split_tokens(std::string_view line)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        if (i == line.size())
            break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

std::int64_t parse_header_int(const Token& tok, std::size_t line_no)
{
    std::int64_t value = 0;
    bool ok = !tok.text.empty() && tok.text.size() <= 18;
    for (char c : tok.text) {
        if (c < '0' || c > '9') {
            ok = false;
            break;
        }
        value = value * 10 + (c - '0');
    }
    if (!ok)
        throw ParseError(line_no, tok.column, "expected a non-negative integer, got '"
                                                  + std::string(tok.text) + "'");
    return value;
}

} // namespace

RaySet parse_rayset(std::string_view text, DedupPolicy policy)
{
    std::optional<std::int64_t> dim;
    std::optional<std::int64_t> sqrt_base;
    std::optional<RaySet> set;
    std::size_t line_no = 0;

    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        const std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

        const auto tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().text.front() == '#')
            continue;

        const Token& keyword = tokens.front();
        if (keyword.text == "dim" || keyword.text == "sqrt") {
            const bool is_dim = keyword.text == "dim";
            auto& slot = is_dim ? dim : sqrt_base;
            if (set)
                throw ParseError(line_no, keyword.column, "header after first ray");
            if (slot)
                throw ParseError(line_no, keyword.column, "duplicate '" + std::string(keyword.text) + "'");
            if (tokens.size() != 2)
                throw ParseError(line_no, keyword.column, "expected '" + std::string(keyword.text) + " <n>'");
            slot = parse_header_int(tokens[1], line_no);
            if (is_dim && *slot == 0)
                throw ParseError(line_no, tokens[1].column, "dimension must be positive");
            if (!is_dim && !is_square_free(*slot))
                throw ParseError(line_no, tokens[1].column,
                                 "sqrt base " + std::to_string(*slot) + " is not square-free");
        } else if (keyword.text == "ray") {
            if (!dim || !sqrt_base)
                throw ParseError(line_no, keyword.column, "ray before 'dim' and 'sqrt' headers");
            if (!set)
                set.emplace(static_cast<std::size_t>(*dim), *sqrt_base);
            if (tokens.size() - 1 != static_cast<std::size_t>(*dim))
                throw ParseError(line_no, keyword.column,
                                 "ray has " + std::to_string(tokens.size() - 1) + " components, expected "
                                     + std::to_string(*dim));
            std::vector<QuadScalar> components;
            for (std::size_t k = 1; k < tokens.size(); ++k) {
                try {
                    components.push_back(QuadScalar::parse(tokens[k].text, *sqrt_base));
                } catch (const std::exception& e) {
                    throw ParseError(line_no, tokens[k].column, e.what());
                }
            }
            try {
                set->add(Ray(std::move(components)), policy);
            } catch (const std::exception& e) {
                throw ParseError(line_no, keyword.column, e.what());
            }
        } else {
            throw ParseError(line_no, keyword.column, "unknown keyword '" + std::string(keyword.text) + "'");
        }
    }

    if (!dim || !sqrt_base)
        throw ParseError(line_no + 1, 1, "missing 'dim' or 'sqrt' header");
    if (!set)
        set.emplace(static_cast<std::size_t>(*dim), *sqrt_base);
    return std::move(*set);
}

RaySet load_rayset(const std::string& path, DedupPolicy policy)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_rayset(buf.str(), policy);
}

std::string serialize_rayset(const RaySet& s)
{
    std::ostringstream out;
    out << "dim " << s.dim() << "\n";
    out << "sqrt " << s.sqrt_base() << "\n";
    for (const auto& ray : s.rays()) {
        out << "ray";
        for (const auto& x : ray.components())
            out << ' ' << x.to_string();
        out << '\n';
    }
    return out.str();
}

} // namespace sic
