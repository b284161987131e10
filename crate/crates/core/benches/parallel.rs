fn main(){}