#include "grandsoft/codes.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace grandsoft {

namespace {

std::uint64_t low_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::size_t rank_of_rows(std::vector<std::uint64_t> rows) {
    std::size_t r = 0;
    for (int col = 63; col >= 0 && r < rows.size(); --col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t pivot = r;
        while (pivot < rows.size() && !(rows[pivot] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

// Remainder of x^power modulo g(x); g has degree dg with bit dg set.
std::uint64_t xpow_mod(std::size_t power, std::uint64_t g, int dg) {
    if (power >= 64) throw std::invalid_argument("xpow_mod: power too large");
    std::uint64_t v = std::uint64_t{1} << power;
    for (int b = 63; b >= dg; --b)
        if ((v >> b) & 1) v ^= g << (b - dg);
    return v;
}

int poly_degree(std::uint64_t p) {
    if (p == 0) throw std::invalid_argument("zero polynomial");
    return 63 - std::countl_zero(p);
}

}  // namespace

LinearCode::LinearCode(std::size_t n, std::size_t k, BitMatrix H) : h_(std::move(H)), g_(1, 1) {
    if (n == 0 || n > 64 || k == 0 || k >= n) throw std::invalid_argument("LinearCode: need 0 < k < n <= 64");
    if (h_.rows() != n - k || h_.cols() != n) throw std::invalid_argument("LinearCode: H must be (n-k) x n");
    n_ = n;
    k_ = k;

    // Reduce H picking pivots from the last column down so the free
    // (message) columns land at the front whenever H allows it.
    std::vector<std::uint64_t> rows(n - k);
    for (std::size_t i = 0; i < n - k; ++i) rows[i] = h_.row_mask(i);
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int col = static_cast<int>(n) - 1; col >= 0 && r < rows.size(); --col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t pivot = r;
        while (pivot < rows.size() && !(rows[pivot] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
        pivot_col.push_back(col);
        ++r;
    }
    if (r < n - k) throw std::invalid_argument("LinearCode: parity-check matrix is rank deficient");

    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<int> free_col;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_col.push_back(static_cast<int>(c));

    // Null-space basis of H: one generator row per free column.
    g_ = BitMatrix(k, n);
    for (std::size_t j = 0; j < k; ++j) {
        std::uint64_t row = std::uint64_t{1} << free_col[j];
        for (std::size_t t = 0; t < pivot_col.size(); ++t)
            if ((rows[t] >> free_col[j]) & 1) row |= std::uint64_t{1} << pivot_col[t];
        g_.set_row_mask(j, row);
    }
    systematic_ = true;
    for (std::size_t j = 0; j < k; ++j)
        if (free_col[j] != static_cast<int>(j)) systematic_ = false;

    finish_setup();
}

LinearCode LinearCode::from_systematic_generator(std::size_t n, std::size_t k,
                                                 const std::vector<std::uint64_t>& g_rows) {
    if (n == 0 || n > 64 || k == 0 || k >= n) throw std::invalid_argument("need 0 < k < n <= 64");
    if (g_rows.size() != k) throw std::invalid_argument("generator must have k rows");
    for (std::size_t i = 0; i < k; ++i)
        if ((g_rows[i] & low_mask(k)) != (std::uint64_t{1} << i))
            throw std::invalid_argument("generator is not systematic [I_k | A]");

    LinearCode code;
    code.n_ = n;
    code.k_ = k;
    code.g_ = BitMatrix(k, n);
    for (std::size_t i = 0; i < k; ++i) code.g_.set_row_mask(i, g_rows[i]);
    code.h_ = BitMatrix(n - k, n);
    for (std::size_t j = 0; j < n - k; ++j) {
        std::uint64_t row = std::uint64_t{1} << (k + j);
        for (std::size_t i = 0; i < k; ++i)
            if ((g_rows[i] >> (k + j)) & 1) row |= std::uint64_t{1} << i;
        code.h_.set_row_mask(j, row);
    }
    code.systematic_ = true;
    code.finish_setup();
    return code;
}

void LinearCode::finish_setup() {
    g_rows_.resize(k_);
    for (std::size_t i = 0; i < k_; ++i) g_rows_[i] = g_.row_mask(i);

    h_col_syndrome_.assign(n_, 0);
    for (std::size_t j = 0; j < n_ - k_; ++j) {
        const std::uint64_t row = h_.row_mask(j);
        for (std::size_t c = 0; c < n_; ++c)
            if ((row >> c) & 1) h_col_syndrome_[c] |= std::uint64_t{1} << j;
    }

    for (std::size_t i = 0; i < k_; ++i)
        if (syndrome(g_rows_[i]) != 0) throw std::logic_error("LinearCode: G H^T != 0");
    std::vector<std::uint64_t> grows = g_rows_;
    if (rank_of_rows(grows) != k_) throw std::logic_error("LinearCode: generator rank deficient");
}

std::uint64_t LinearCode::syndrome(std::uint64_t word) const {
    if (n_ < 64 && (word >> n_) != 0) throw std::invalid_argument("syndrome: word exceeds length n");
    std::uint64_t s = 0;
    while (word) {
        s ^= h_col_syndrome_[std::countr_zero(word)];
        word &= word - 1;
    }
    return s;
}

std::uint64_t LinearCode::encode(std::uint64_t message) const {
    if (k_ < 64 && (message >> k_) != 0) throw std::invalid_argument("encode: message exceeds length k");
    std::uint64_t word = 0;
    while (message) {
        word ^= g_rows_[std::countr_zero(message)];
        message &= message - 1;
    }
    return word;
}

LinearCode random_linear_code(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (n == 0 || n > 64 || k == 0 || k >= n) throw std::invalid_argument("random_linear_code: need 0 < k < n <= 64");
    std::mt19937_64 rng(seed);
    const std::uint64_t mask = low_mask(n);
    while (true) {
        std::vector<std::uint64_t> rows(n - k);
        for (auto& r : rows) r = rng() & mask;
        if (rank_of_rows(rows) != n - k) continue;
        BitMatrix h(n - k, n);
        for (std::size_t i = 0; i < n - k; ++i) h.set_row_mask(i, rows[i]);
        return LinearCode(n, k, std::move(h));
    }
}

LinearCode crc_code(std::size_t n, std::size_t k, std::uint64_t poly) {
    if (n == 0 || n > 64 || k == 0 || k >= n) throw std::invalid_argument("crc_code: need 0 < k < n <= 64");
    const int d = poly_degree(poly);
    if (static_cast<std::size_t>(d) != n - k)
        throw std::invalid_argument("crc_code: polynomial degree must equal n - k");
    if (!(poly & 1)) throw std::invalid_argument("crc_code: polynomial needs a nonzero constant term");

    // Check bits are the CRC remainder of the message: row i of the
    // systematic generator carries x^(i+d) mod poly in positions k..n-1.
    std::vector<std::uint64_t> g_rows(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t rem = xpow_mod(i + d, poly, d);
        g_rows[i] = (std::uint64_t{1} << i) | (rem << k);
    }
    return LinearCode::from_systematic_generator(n, k, g_rows);
}

namespace {

// GF(2^6) generated by x^6 + x + 1.
struct GF64 {
    int exp[126];
    int log[64];
    GF64() {
        int x = 1;
        for (int i = 0; i < 63; ++i) {
            exp[i] = x;
            exp[i + 63] = x;
            log[x] = i;
            x <<= 1;
            if (x & 0x40) x ^= 0x43;
        }
    }
    int mul(int a, int b) const { return (a == 0 || b == 0) ? 0 : exp[log[a] + log[b]]; }
};

// Minimal polynomial of alpha^e over GF(2), as a bitmask with bit i the
// coefficient of x^i.
std::uint64_t minimal_poly(const GF64& gf, int e) {
    std::vector<int> cls;
    int c = e % 63;
    do {
        cls.push_back(c);
        c = (2 * c) % 63;
    } while (c != e % 63);

    std::vector<int> coeff = {1};  // product of (x + alpha^c)
    for (int ci : cls) {
        std::vector<int> next(coeff.size() + 1, 0);
        const int root = gf.exp[ci];
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            next[i + 1] ^= coeff[i];
            next[i] ^= gf.mul(coeff[i], root);
        }
        coeff = std::move(next);
    }
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i] != 0 && coeff[i] != 1) throw std::logic_error("minimal polynomial not binary");
        if (coeff[i]) mask |= std::uint64_t{1} << i;
    }
    return mask;
}

std::uint64_t poly_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b) {
        r ^= a << std::countr_zero(b);
        b &= b - 1;
    }
    return r;
}

}  // namespace

LinearCode ebch_code(std::size_t n, std::size_t k) {
    if (n != 64) throw std::invalid_argument("ebch_code: only length 64 (BCH length 63 plus parity) supported");
    static const GF64 gf;

    std::uint64_t g = 0;
    for (int t = 1; t <= 15 && g == 0; ++t) {
        std::vector<int> reps;
        std::uint64_t cand = 1;
        for (int e = 1; e <= 2 * t - 1; e += 2) {
            // conjugacy class representative: smallest exponent in the class
            int rep = e, c = e;
            do {
                rep = std::min(rep, c);
                c = (2 * c) % 63;
            } while (c != e);
            if (std::find(reps.begin(), reps.end(), rep) == reps.end()) {
                reps.push_back(rep);
                cand = poly_mul(cand, minimal_poly(gf, e));
            }
        }
        if (63 - poly_degree(cand) == static_cast<int>(k)) g = cand;
        if (63 - poly_degree(cand) < static_cast<int>(k)) break;
    }
    if (g == 0) throw std::invalid_argument("ebch_code: unsupported dimension");

    const int d = 63 - static_cast<int>(k);
    std::vector<std::uint64_t> g_rows(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t rem = xpow_mod(i + d, g, d);
        std::uint64_t row = (std::uint64_t{1} << i) | (rem << k);
        row |= static_cast<std::uint64_t>(std::popcount(row) & 1) << 63;  // overall even parity
        g_rows[i] = row;
    }
    return LinearCode::from_systematic_generator(64, k, g_rows);
}

LinearCode load_parity_check(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_parity_check: cannot open " + path);
    std::size_t n = 0, k = 0;
    if (!(in >> n >> k) || n == 0 || n > 64 || k == 0 || k >= n)
        throw std::runtime_error("load_parity_check: bad header in " + path);
    BitMatrix h(n - k, n);
    std::string line;
    std::getline(in, line);
    for (std::size_t r = 0; r < n - k; ++r) {
        if (!std::getline(in, line) || line.size() < n)
            throw std::runtime_error("load_parity_check: truncated matrix in " + path);
        std::uint64_t mask = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (line[c] == '1')
                mask |= std::uint64_t{1} << c;
            else if (line[c] != '0')
                throw std::runtime_error("load_parity_check: invalid character in " + path);
        }
        h.set_row_mask(r, mask);
    }
    return LinearCode(n, k, std::move(h));
}

void save_parity_check(const LinearCode& code, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_parity_check: cannot open " + path);
    out << code.n() << ' ' << code.k() << '\n';
    for (std::size_t r = 0; r < code.n() - code.k(); ++r) {
        const std::uint64_t row = code.parity_check().row_mask(r);
        for (std::size_t c = 0; c < code.n(); ++c) out << (((row >> c) & 1) ? '1' : '0');
        out << '\n';
    }
}

}  // namespace grandsoft
