pub fn answer() -> u32 { 42 }

#[doc = include_str!("../../../book/src/test-chapter.md")]
#[doc(hidden)]
pub mod book_test {}
