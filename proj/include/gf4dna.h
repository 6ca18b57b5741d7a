/* C API for the gf4dna library: composite group codes over GF(4) and the
 * DNA-code toolchain built on them. All functions are thread-compatible on
 * distinct handles. Functions returning int give 0 (GF4DNA_OK) on success and
 * a negative error code otherwise; when an err buffer is supplied it receives
 * a NUL-terminated message. Strings returned as char* are heap-allocated and
 * must be released with gf4dna_string_free().
 */
#ifndef GF4DNA_H
#define GF4DNA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define GF4DNA_OK 0
#define GF4DNA_EINVAL -1  /* bad arguments / malformed descriptor */
#define GF4DNA_EBUDGET -2 /* enumeration budget exceeded */
#define GF4DNA_EIO -3     /* file I/O failure */
#define GF4DNA_EFAIL -4   /* other failure, see message */

typedef struct gf4dna_matrix gf4dna_matrix;
typedef struct gf4dna_code gf4dna_code;

const char* gf4dna_version(void);

/* --- matrices ---------------------------------------------------------- */

/* Build from a JSON descriptor: {"family":"G12","n":32,"coeffs":"..."} for
 * the composite families, or {"group":{...},"coeffs":"..."} for the plain
 * group-ring image. Returns NULL on error. */
gf4dna_matrix* gf4dna_build_from_json(const char* spec_json, char* err, size_t errlen);

/* Parse the text fixture format (rows of {0,1,w,W} separated by spaces). */
gf4dna_matrix* gf4dna_matrix_parse(const char* text, char* err, size_t errlen);

int gf4dna_matrix_rows(const gf4dna_matrix* m);
int gf4dna_matrix_cols(const gf4dna_matrix* m);
/* Entry as two bits (0,1,2,3 = 0,1,w,w^2); -1 on range error. */
int gf4dna_matrix_entry(const gf4dna_matrix* m, int row, int col);
char* gf4dna_matrix_to_text(const gf4dna_matrix* m);
void gf4dna_matrix_free(gf4dna_matrix* m);

/* --- codes -------------------------------------------------------------- */

gf4dna_code* gf4dna_code_create(const gf4dna_matrix* generator, char* err, size_t errlen);
int gf4dna_code_length(const gf4dna_code* c);
int gf4dna_code_dimension(const gf4dna_code* c);
char* gf4dna_code_size_decimal(const gf4dna_code* c);
/* 1 = reversible, 0 = not. */
int gf4dna_code_is_reversible(const gf4dna_code* c);
int gf4dna_code_contains_all_ones(const gf4dna_code* c);

#define GF4DNA_DIST_BRUTE 0
#define GF4DNA_DIST_INFOSET 1
int gf4dna_code_min_distance(const gf4dna_code* c, int method, int* out_distance,
                             int* out_certified, char* err, size_t errlen);

/* "GCW: [c0, c1, ..., cn]" for codes within the enumeration budget. */
char* gf4dna_code_gcw(const gf4dna_code* c, char* err, size_t errlen);

/* Full complete-weight-enumerator dump, CSV lines "n0,n1,nw,nW,count". */
char* gf4dna_code_cwe_csv(const gf4dna_code* c, char* err, size_t errlen);

/* Constraint flags, or-able. */
#define GF4DNA_HD 1
#define GF4DNA_RV 2
#define GF4DNA_RC 4
#define GF4DNA_GC 8
/* Decimal count of codewords jointly meeting the constraints at distance d
 * (out_satisfied set to 0/1). allow_shortcut enables the reversibility route
 * for HD/RV/RC on large codes. Returns NULL on error. */
char* gf4dna_code_constraint_count(const gf4dna_code* c, int d, int constraints,
                                   int allow_shortcut, int* out_satisfied,
                                   char* err, size_t errlen);

/* Writes codewords through the DNA alphabet, one ATCG word per line. */
int gf4dna_code_export_dna(const gf4dna_code* c, const char* path, char* err, size_t errlen);
void gf4dna_code_free(gf4dna_code* c);

/* --- toolchain ---------------------------------------------------------- */

/* Self-checks over the bundled reference instances; returns a report with
 * one PASS/FAIL line per check and stores the failure count. */
char* gf4dna_verify(int full, int* out_failures);

/* Runs a search from a JSON config (see SearchConfig fields in the README)
 * and writes JSONL records to out_path. Returns the number of emitted
 * records, or a negative error code. */
long long gf4dna_search_run(const char* config_json, const char* out_path,
                            char* err, size_t errlen);

/* Renders the best-found table from a JSONL record file; csv selects the
 * machine-readable flavour. */
char* gf4dna_table_render(const char* records_path, int csv, char* err, size_t errlen);

void gf4dna_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* GF4DNA_H */
