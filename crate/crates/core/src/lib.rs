pub mod algebra;
pub mod centralizer;
pub mod classifier;
pub mod cli;
pub mod oracle;
pub mod words;

pub use algebra::{AlgebraError, GroupElement, GroupId, Order, PointPart};
pub use centralizer::{center, centralizer, commutes, contains, cyclic_membership, SubgroupDescriptor};
pub use classifier::{classify, euler_factor, ClassificationResult, GroupKind, PresentationSignature};
pub use oracle::{affine_image, ball, brute_centralizer, check_faithful, verify_centralizer, AffineIsometry, VerificationReport};
pub use words::{format, parse_element, parse_word, Alphabet, Word, WordError};
