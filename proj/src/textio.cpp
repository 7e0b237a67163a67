#include "gebra/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "gebra/errors.hpp"
#include "gebra/eval.hpp"

namespace gebra {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::size_t a = 0, b = line.size();
        while (a < b && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
        if (b > a) out.push_back(line.substr(a, b - a));
    }
    return out;
}

// scalar expressions never need an algebra; any dimension serves
RatFunc scalar_of(const std::string& src, const std::string& where) {
    static const AlgebraContext plain(BilinearForm::zero(1), BilinearForm::zero(1));
    Value v = evaluate_str(src, plain);
    if (const auto* s = std::get_if<RatFunc>(&v)) return *s;
    throw Error(where + ": '" + src + "' is not a scalar expression");
}

// "[a, b, c]" with commas split at bracket/paren depth zero
std::vector<std::string> split_row(const std::string& line, const std::string& where) {
    if (line.size() < 2 || line.front() != '[' || line.back() != ']')
        throw Error(where + ": expected a bracketed row, got '" + line + "'");
    std::vector<std::string> cells;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 1; i + 1 < line.size(); ++i) {
        const char c = line[i];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    cells.push_back(cur);
    return cells;
}

std::vector<std::vector<RatFunc>> parse_rows(const std::vector<std::string>& lines,
                                             const std::string& where) {
    std::vector<std::vector<RatFunc>> rows;
    for (const std::string& line : lines) {
        std::vector<RatFunc> row;
        for (const std::string& cell : split_row(line, where)) row.push_back(scalar_of(cell, where));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

EndoMatrix read_matrix_file(const std::string& path) {
    auto rows = parse_rows(read_lines(path), path);
    const std::size_t n = rows.size();
    if (n == 0) throw Error(path + ": empty matrix");
    EndoMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw Error(path + ": row " + std::to_string(i + 1) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::optional<MatrixDiff> first_matrix_diff(const EndoMatrix& got, const EndoMatrix& want) {
    if (got.size() != want.size())
        return MatrixDiff{0, 0, "size " + std::to_string(got.size()),
                          "size " + std::to_string(want.size())};
    for (std::size_t i = 0; i < got.size(); ++i)
        for (std::size_t j = 0; j < got.size(); ++j)
            if (!(got.at(i, j) == want.at(i, j)))
                return MatrixDiff{i, j, got.at(i, j).str(), want.at(i, j).str()};
    return std::nullopt;
}

std::map<std::string, std::string> read_kv_file(const std::string& path) {
    std::map<std::string, std::string> out;
    for (const std::string& line : read_lines(path)) {
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw Error(path + ": expected 'key: value', got '" + line + "'");
        std::string key = line.substr(0, colon), val = line.substr(colon + 1);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
        std::size_t a = 0;
        while (a < val.size() && std::isspace(static_cast<unsigned char>(val[a]))) ++a;
        out[key] = val.substr(a);
    }
    return out;
}

AlgebraContext read_context_file(const std::string& path, std::uint32_t fallback_dim) {
    const std::vector<std::string> lines = read_lines(path);
    std::size_t pos = 0;
    std::uint32_t dim = fallback_dim;

    if (pos < lines.size() && lines[pos].rfind("dim", 0) == 0) {
        std::istringstream is(lines[pos].substr(3));
        long d = 0;
        if (!(is >> d) || d < 1 || d > 64) throw Error(path + ": bad dim line '" + lines[pos] + "'");
        dim = std::uint32_t(d);
        ++pos;
    }

    std::optional<BilinearForm> b, bi;
    while (pos < lines.size()) {
        const std::string section = lines[pos];
        if (section != "B" && section != "BI")
            throw Error(path + ": expected section 'B' or 'BI', got '" + section + "'");
        ++pos;
        if (lines.size() - pos < dim)
            throw Error(path + ": section " + section + " needs " + std::to_string(dim) + " rows");
        std::vector<std::string> rows(lines.begin() + long(pos), lines.begin() + long(pos + dim));
        auto cells = parse_rows(rows, path);
        BilinearForm f(dim);
        for (std::uint32_t i = 0; i < dim; ++i) {
            if (cells[i].size() != dim)
                throw Error(path + ": section " + section + " row " + std::to_string(i + 1) +
                            " has " + std::to_string(cells[i].size()) + " entries, expected " +
                            std::to_string(dim));
            for (std::uint32_t j = 0; j < dim; ++j) f.at(i + 1, j + 1) = cells[i][j];
        }
        (section == "B" ? b : bi) = std::move(f);
        pos += dim;
    }

    if (!b) b = BilinearForm::symbolic("b", dim);
    if (!bi) bi = BilinearForm::symbolic("p", dim);
    return AlgebraContext(*b, *bi);
}

SubstMap parse_bindings(const std::string& spec) {
    SubstMap m;
    std::string item;
    std::istringstream is(spec);
    while (std::getline(is, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("binding '" + item + "' is not sym=value");
        Expr lhs = parse(item.substr(0, eq));
        if (lhs.kind != Expr::Kind::Symbol)
            throw Error("binding target '" + item.substr(0, eq) + "' is not a symbol");
        m[lhs.sym] = scalar_of(item.substr(eq + 1), "binding");
    }
    return m;
}

}  // namespace gebra
