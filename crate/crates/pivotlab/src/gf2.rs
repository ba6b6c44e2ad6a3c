//! Bit-packed GF(2) linear algebra on matrices with at most 32 columns.

/// Rank of the matrix whose rows are the given bit words.
pub fn rank(rows: &[u32]) -> usize {
    let mut basis: Vec<u32> = Vec::with_capacity(rows.len());
    for &row in rows {
        let mut r = row;
        for &b in &basis {
            let pivot = b & b.wrapping_neg();
            if r & pivot != 0 {
                r ^= b;
            }
        }
        if r != 0 {
            basis.push(r);
        }
    }
    basis.len()
}

/// True when the square matrix restricted to the columns listed in
/// `col_mask` (rows given in the same order as the set bits) is invertible.
pub fn nonsingular(rows: &[u32]) -> bool {
    rank(rows) == rows.len()
}

/// Reduced row echelon form with recorded pivot columns.
///
/// Rows are reduced in place; returns the pivot columns in increasing order.
/// Scans columns left to right, so the pivot set is the lexicographically
/// first information set of the row space.
pub fn rref(rows: &mut [u32], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let bit = 1u32 << c;
        let Some(sel) = (r..rows.len()).find(|&i| rows[i] & bit != 0) else {
            continue;
        };
        rows.swap(r, sel);
        for i in 0..rows.len() {
            if i != r && rows[i] & bit != 0 {
                rows[i] ^= rows[r];
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Row space equality, decided by comparing reduced echelon forms.
pub fn same_row_space(a: &[u32], b: &[u32], ncols: usize) -> bool {
    let mut ra: Vec<u32> = a.to_vec();
    let mut rb: Vec<u32> = b.to_vec();
    rref(&mut ra, ncols);
    rref(&mut rb, ncols);
    ra.retain(|&x| x != 0);
    rb.retain(|&x| x != 0);
    ra == rb
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_counts_independent_rows() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[0b01, 0b10, 0b11]), 2);
        assert_eq!(rank(&[0b001, 0b010, 0b100]), 3);
        assert_eq!(rank(&[0b101, 0b101]), 1);
    }

    #[test]
    fn rref_pivots_are_leftmost() {
        let mut rows = vec![0b0110u32, 0b1100];
        let piv = rref(&mut rows, 4);
        assert_eq!(piv, vec![1, 2]);
    }

    #[test]
    fn row_space_survives_row_ops() {
        let a = [0b1100u32, 0b0111];
        let b = [0b1011u32, 0b0111];
        assert!(same_row_space(&a, &b, 4));
        let c = [0b1100u32, 0b0011];
        assert!(!same_row_space(&a, &c, 4));
    }
}
