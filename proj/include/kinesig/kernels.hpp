#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Dense kernels behind every tensor op. All loops accumulate each output
// element in a fixed index order, so results are bitwise identical whatever
// the OpenMP thread count (serial included). Gradient kernels accumulate
// (+=) into their destination buffers.
namespace kinesig::kern {

// Thread-local arithmetic-op counter used by the instrumented-trace FLOPs
// oracle and the efficiency reporter. Null disables counting.
struct FlopCounter {
    long long total = 0;
};
FlopCounter* flop_counter();
void set_flop_counter(FlopCounter* c);
void count_flops(long long n);

// C(m x n) = A(m x k) . B(k x n)
void gemm(const double* A, const double* B, double* C, std::size_t m, std::size_t k, std::size_t n);
// C += A . B
void gemm_acc(const double* A, const double* B, double* C, std::size_t m, std::size_t k, std::size_t n);
// C(m x n) += A(m x k) . B(n x k)^T
void gemm_nt_acc(const double* A, const double* B, double* C, std::size_t m, std::size_t k, std::size_t n);
// C(p x q) += A(m x p)^T . B(m x q)
void gemm_tn_acc(const double* A, const double* B, double* C, std::size_t m, std::size_t p, std::size_t q);

// Y(N x out) = X(N x in) . W(in x out) + b
void linear_fwd(const double* X, const double* W, const double* b, double* Y,
                std::size_t N, std::size_t in, std::size_t out);
// db += column sums of dY
void colsum_acc(const double* dY, double* db, std::size_t N, std::size_t out);

// Scaled dot-product attention over G groups of L tokens, H heads laid out
// as column slices of width d/H. probs receives the G*H*L*L softmax matrix.
// Returns false if any score went non-finite.
bool attention_fwd(const double* Q, const double* K, const double* V, double* out, double* probs,
                   std::size_t G, std::size_t L, std::size_t d, std::size_t H);
void attention_bwd(const double* dOut, const double* Q, const double* K, const double* V,
                   const double* probs, double* dQ, double* dK, double* dV,
                   std::size_t G, std::size_t L, std::size_t d, std::size_t H);

// Row-wise stabilized softmax over the trailing extent.
void softmax_rows_fwd(const double* X, double* Y, std::size_t rows, std::size_t n);
void softmax_rows_bwd(const double* Y, const double* dY, double* dX, std::size_t rows, std::size_t n);

void layer_norm_fwd(const double* X, const double* gamma, const double* beta, double* Y,
                    double* save_mean, double* save_inv_std, std::size_t N, std::size_t d, double eps);
void layer_norm_bwd(const double* X, const double* gamma, const double* save_mean,
                    const double* save_inv_std, const double* dY, double* dX, double* dgamma,
                    double* dbeta, std::size_t N, std::size_t d);

void batch_norm_train_fwd(const double* X, const double* gamma, const double* beta, double* Y,
                          double* batch_mean, double* batch_inv_std, std::size_t N, std::size_t d,
                          double eps);
void batch_norm_train_bwd(const double* X, const double* gamma, const double* batch_mean,
                          const double* batch_inv_std, const double* dY, double* dX,
                          double* dgamma, double* dbeta, std::size_t N, std::size_t d);
void batch_norm_eval_fwd(const double* X, const double* gamma, const double* beta,
                         const double* mean, const double* var, double* Y, std::size_t N,
                         std::size_t d, double eps);
void batch_norm_eval_bwd(const double* gamma, const double* var, const double* dY, double* dX,
                         double* dgamma_xhat_term_unused, std::size_t N, std::size_t d, double eps);

void relu_fwd(const double* X, double* Y, std::size_t n);
void relu_bwd(const double* X, const double* dY, double* dX, std::size_t n);

void add_fwd(const double* A, const double* B, double* Y, std::size_t n);
void sub_fwd(const double* A, const double* B, double* Y, std::size_t n);
void mul_fwd(const double* A, const double* B, double* Y, std::size_t n);
void scale_fwd(const double* A, double c, double* Y, std::size_t n);
void axpy_acc(const double* X, double a, double* Y, std::size_t n);  // Y += a*X
void mul_acc(const double* A, const double* B, double* Y, std::size_t n);  // Y += A.*B

// mask[i] in {0, 1/(1-p)}; counter RNG keyed on (key, i).
void dropout_fwd(const double* X, double* Y, double* mask, std::size_t n, double p, std::uint64_t key);

// loss = mean_b (logsumexp(logits_b) - logits_b[label_b]); probs receives softmax rows.
double cross_entropy_fwd(const double* logits, const int* labels, double* probs, std::size_t B,
                         std::size_t C);
void cross_entropy_bwd(const double* probs, const int* labels, double gout, double* dlogits,
                       std::size_t B, std::size_t C);

// out(G x d): mean over each group of L consecutive rows of X(G*L x d).
void mean_groups_fwd(const double* X, double* out, std::size_t G, std::size_t L, std::size_t d);
void mean_groups_bwd(const double* dOut, double* dX, std::size_t G, std::size_t L, std::size_t d);

// Y = X with E[r % L] added to row r.
void index_embedding_fwd(const double* X, const double* E, double* Y, std::size_t rows,
                         std::size_t L, std::size_t d);
void index_embedding_bwd_table(const double* dY, double* dE, std::size_t rows, std::size_t L,
                               std::size_t d);

// Row-wise v / max(||v||, eps); inv_norm[r] receives the factor used.
void l2_normalize_fwd(const double* X, double* Y, double* inv_norm, std::size_t rows, std::size_t d,
                      double eps, bool* guard_hit);
void l2_normalize_bwd(const double* Y, const double* inv_norm, const double* dY, double* dX,
                      std::size_t rows, std::size_t d);

double sum_all(const double* X, std::size_t n);

}  // namespace kinesig::kern

// Naive single-threaded mirrors of the hot kernels above. They exist as an
// independent cross-check: tests assert bitwise agreement, and
// tools/bench_kernels times the two side by side. Nothing in the library
// links against this namespace.
namespace kinesig::kern::ref {

void gemm(const double* A, const double* B, double* C, std::size_t m, std::size_t k, std::size_t n);
void linear_fwd(const double* X, const double* W, const double* b, double* Y,
                std::size_t N, std::size_t in, std::size_t out);
bool attention_fwd(const double* Q, const double* K, const double* V, double* out, double* probs,
                   std::size_t G, std::size_t L, std::size_t d, std::size_t H);
void softmax_rows_fwd(const double* X, double* Y, std::size_t rows, std::size_t n);
void layer_norm_fwd(const double* X, const double* gamma, const double* beta, double* Y,
                    double* save_mean, double* save_inv_std, std::size_t N, std::size_t d, double eps);
void mean_groups_fwd(const double* X, double* out, std::size_t G, std::size_t L, std::size_t d);
void relu_fwd(const double* X, double* Y, std::size_t n);

}  // namespace kinesig::kern::ref
