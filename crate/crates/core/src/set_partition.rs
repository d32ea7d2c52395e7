//! Enumeration of set partitions of {0,…,k−1} via restricted growth
//! strings, together with the coefficient c(𝓑) = ∏ (card B_i − 1)! and
//! block sums against a composition.

use crate::composition::Composition;

/// A partition of {0,…,k−1} into disjoint nonempty blocks. Blocks are
/// ordered by their smallest element; elements within a block ascend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    /// c(𝓑) = ∏ (card B_i − 1)!.
    pub fn coefficient(&self) -> u64 {
        self.blocks
            .iter()
            .map(|b| (1..b.len() as u64).product::<u64>())
            .product()
    }

    /// Block sums b_s = Σ_{j∈B_s} i_j for a composition with one part per
    /// ground element.
    pub fn block_sums(&self, comp: &Composition) -> Vec<u32> {
        assert_eq!(comp.len(), self.ground_size(), "composition length must match");
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&j| comp.parts()[j]).sum())
            .collect()
    }
}

/// Iterator over all set partitions of {0,…,k−1}, k ≥ 1. Yields the
/// k-th Bell number of partitions, each exactly once.
pub fn set_partitions(k: usize) -> SetPartitions {
    assert!(k >= 1, "set_partitions requires k >= 1");
    SetPartitions {
        rgs: vec![0; k],
        done: false,
    }
}

pub struct SetPartitions {
    rgs: Vec<usize>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let current = partition_from_rgs(&self.rgs);
        // Advance the restricted growth string: rightmost position that can
        // still grow (rgs[i] <= max of prefix), reset the tail to zero.
        let k = self.rgs.len();
        let mut advanced = false;
        for i in (1..k).rev() {
            let prefix_max = *self.rgs[..i].iter().max().unwrap();
            if self.rgs[i] <= prefix_max {
                self.rgs[i] += 1;
                for j in i + 1..k {
                    self.rgs[j] = 0;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.done = true;
        }
        Some(current)
    }
}

fn partition_from_rgs(rgs: &[usize]) -> SetPartition {
    let block_count = rgs.iter().max().map_or(0, |m| m + 1);
    let mut blocks = vec![Vec::new(); block_count];
    for (elem, &b) in rgs.iter().enumerate() {
        blocks[b].push(elem);
    }
    SetPartition { blocks }
}
