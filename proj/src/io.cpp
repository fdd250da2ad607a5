#include "jorvar/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace jorvar {

namespace {

// whitespace-separated tokens with '#' line comments
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok)
            tokens.push_back(tok);
    }
    return tokens;
}

int parse_index(const std::string& tok, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size())
            throw ParseError("bad " + what + " '" + tok + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad " + what + " '" + tok + "'");
    }
}

} // namespace

Algebra parse_jalg(std::istream& in) {
    auto tokens = tokenize(in);
    if (tokens.size() < 2 || tokens[0] != "dim")
        throw ParseError(".jalg file must start with 'dim <n>'");
    int n = parse_index(tokens[1], "dimension");
    if (n < 1)
        throw ParseError("dimension must be at least 1");
    if ((tokens.size() - 2) % 4 != 0)
        throw ParseError(".jalg entries must come in groups '<i> <j> <k> <value>'");

    std::vector<Rat> tensor(size_t(n) * n * n, Rat(0));
    std::vector<bool> seen(size_t(n) * n * n, false);
    for (size_t pos = 2; pos + 3 < tokens.size(); pos += 4) {
        int i = parse_index(tokens[pos], "index i");
        int j = parse_index(tokens[pos + 1], "index j");
        int k = parse_index(tokens[pos + 2], "index k");
        if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n)
            throw ParseError("index out of range in .jalg entry");
        if (i > j)
            throw ParseError(".jalg entries require i <= j (symmetric completion is implied)");
        Rat value = parse_rat(tokens[pos + 3]);
        size_t idx = (size_t(i - 1) * n + (j - 1)) * n + (k - 1);
        if (seen[idx])
            throw ParseError("duplicate entry for c(" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")");
        seen[idx] = true;
        tensor[idx] = value;
        tensor[(size_t(j - 1) * n + (i - 1)) * n + (k - 1)] = value;
    }
    return Algebra(n, std::move(tensor));
}

Algebra parse_jalg_string(const std::string& text) {
    std::istringstream in(text);
    return parse_jalg(in);
}

Algebra load_jalg(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return parse_jalg(in);
}

std::string to_jalg(const Algebra& a) {
    std::ostringstream os;
    if (!a.label().empty())
        os << "# " << a.label() << "\n";
    os << "dim " << a.dim() << "\n";
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k)
                if (a.c(i, j, k) != 0)
                    os << (i + 1) << " " << (j + 1) << " " << (k + 1) << " "
                       << to_string(a.c(i, j, k)) << "\n";
    return os.str();
}

UniPoly parse_poly_entry(const std::string& token) {
    if (token.empty())
        throw ParseError("empty polynomial entry");
    std::vector<Rat> coeffs;
    auto add_term = [&](const std::string& term, bool negative) {
        if (term.empty())
            throw ParseError("empty term in polynomial entry '" + token + "'");
        std::string coeff_text = "1";
        std::string power_text;
        auto star = term.find('*');
        if (star != std::string::npos) {
            coeff_text = term.substr(0, star);
            power_text = term.substr(star + 1);
        } else if (term[0] == 't') {
            power_text = term;
        } else {
            coeff_text = term;
        }
        int power = 0;
        if (!power_text.empty()) {
            if (power_text == "t")
                power = 1;
            else if (power_text.rfind("t^", 0) == 0)
                power = parse_index(power_text.substr(2), "exponent");
            else
                throw ParseError("bad power '" + power_text + "' in entry '" + token + "'");
            if (power < 0)
                throw ParseError("negative exponent in entry '" + token + "'");
        }
        Rat coeff = parse_rat(coeff_text);
        if (negative)
            coeff = -coeff;
        if (static_cast<int>(coeffs.size()) <= power)
            coeffs.resize(power + 1, Rat(0));
        coeffs[power] += coeff;
    };

    size_t start = 0;
    bool negative = false;
    if (token[0] == '+' || token[0] == '-') {
        negative = token[0] == '-';
        start = 1;
    }
    size_t pos = start;
    for (; pos < token.size(); ++pos) {
        char c = token[pos];
        if (c == '+' || c == '-') {
            add_term(token.substr(start, pos - start), negative);
            negative = c == '-';
            start = pos + 1;
        }
    }
    add_term(token.substr(start), negative);
    return UniPoly(std::move(coeffs));
}

std::string poly_entry_text(const UniPoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        Rat c = p.coeff(k);
        if (c == 0)
            continue;
        if (!out.empty() && c > 0)
            out += "+";
        if (k == 0) {
            out += to_string(c);
        } else {
            if (c == -1)
                out += "-";
            else if (c != 1)
                out += to_string(c) + "*";
            out += (k == 1) ? "t" : "t^" + std::to_string(k);
        }
    }
    return out;
}

PolyMatrix parse_poly_matrix(std::istream& in) {
    auto tokens = tokenize(in);
    if (tokens.size() < 3 || tokens[0] != "matrix")
        throw ParseError("matrix file must start with 'matrix <rows> <cols>'");
    int rows = parse_index(tokens[1], "row count");
    int cols = parse_index(tokens[2], "column count");
    if (rows < 1 || cols < 1)
        throw ParseError("matrix dimensions must be positive");
    if (tokens.size() != size_t(3) + size_t(rows) * cols)
        throw ParseError("matrix file has " + std::to_string(tokens.size() - 3) +
                         " entries, expected " + std::to_string(size_t(rows) * cols));
    PolyMatrix m(rows, cols);
    size_t pos = 3;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = parse_poly_entry(tokens[pos++]);
    return m;
}

PolyMatrix parse_poly_matrix_string(const std::string& text) {
    std::istringstream in(text);
    return parse_poly_matrix(in);
}

PolyMatrix load_poly_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return parse_poly_matrix(in);
}

std::string to_poly_matrix_text(const PolyMatrix& m) {
    std::ostringstream os;
    os << "matrix " << m.rows() << " " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << poly_entry_text(m.at(i, j));
        os << "\n";
    }
    return os.str();
}

RatMatrix to_constant_matrix(const PolyMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).degree() > 0)
                throw ParseError("matrix entry depends on t where a constant is required");
            out.at(i, j) = m.at(i, j).coeff(0);
        }
    return out;
}

std::string catalog_manifest_json() {
    nlohmann::ordered_json manifest = nlohmann::ordered_json::array();
    for (const auto& id : catalog_ids()) {
        const CatalogEntry& entry = catalog_get(id);
        nlohmann::ordered_json e;
        e["id"] = entry.id;
        e["dim"] = entry.algebra.dim();
        e["dimAut"] = entry.expected.dim_aut;
        e["dimAnn"] = entry.expected.dim_ann;
        e["dimRad"] = entry.expected.dim_rad;
        e["radicalNiltype"] = entry.expected.rad_niltype;
        e["associative"] = entry.expected.associative;
        e["unital"] = entry.expected.unital;
        manifest.push_back(std::move(e));
    }
    return manifest.dump(2) + "\n";
}

} // namespace jorvar
