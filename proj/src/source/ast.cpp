// Copyright 2026 The chainlint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "source/ast.hpp"

namespace chainlint::go {

std::string_view node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::File: return "File";
    case NodeKind::Bad: return "Bad";
    case NodeKind::Ident: return "Ident";
    case NodeKind::BasicLit: return "BasicLit";
    case NodeKind::CompositeLit: return "CompositeLit";
    case NodeKind::KeyValueExpr: return "KeyValueExpr";
    case NodeKind::FuncLit: return "FuncLit";
    case NodeKind::ParenExpr: return "ParenExpr";
    case NodeKind::SelectorExpr: return "SelectorExpr";
    case NodeKind::IndexExpr: return "IndexExpr";
    case NodeKind::SliceExpr: return "SliceExpr";
    case NodeKind::TypeAssertExpr: return "TypeAssertExpr";
    case NodeKind::CallExpr: return "CallExpr";
    case NodeKind::StarExpr: return "StarExpr";
    case NodeKind::UnaryExpr: return "UnaryExpr";
    case NodeKind::BinaryExpr: return "BinaryExpr";
    case NodeKind::ArrayType: return "ArrayType";
    case NodeKind::SliceType: return "SliceType";
    case NodeKind::EllipsisType: return "EllipsisType";
    case NodeKind::MapType: return "MapType";
    case NodeKind::ChanType: return "ChanType";
    case NodeKind::FuncType: return "FuncType";
    case NodeKind::StructType: return "StructType";
    case NodeKind::InterfaceType: return "InterfaceType";
    case NodeKind::FieldList: return "FieldList";
    case NodeKind::Field: return "Field";
    case NodeKind::BlockStmt: return "BlockStmt";
    case NodeKind::ExprStmt: return "ExprStmt";
    case NodeKind::AssignStmt: return "AssignStmt";
    case NodeKind::IncDecStmt: return "IncDecStmt";
    case NodeKind::SendStmt: return "SendStmt";
    case NodeKind::GoStmt: return "GoStmt";
    case NodeKind::DeferStmt: return "DeferStmt";
    case NodeKind::ReturnStmt: return "ReturnStmt";
    case NodeKind::BranchStmt: return "BranchStmt";
    case NodeKind::IfStmt: return "IfStmt";
    case NodeKind::SwitchStmt: return "SwitchStmt";
    case NodeKind::TypeSwitchStmt: return "TypeSwitchStmt";
    case NodeKind::CaseClause: return "CaseClause";
    case NodeKind::SelectStmt: return "SelectStmt";
    case NodeKind::CommClause: return "CommClause";
    case NodeKind::ForStmt: return "ForStmt";
    case NodeKind::RangeStmt: return "RangeStmt";
    case NodeKind::LabeledStmt: return "LabeledStmt";
    case NodeKind::DeclStmt: return "DeclStmt";
    case NodeKind::EmptyStmt: return "EmptyStmt";
    case NodeKind::GenDecl: return "GenDecl";
    case NodeKind::ImportSpec: return "ImportSpec";
    case NodeKind::ValueSpec: return "ValueSpec";
    case NodeKind::TypeSpec: return "TypeSpec";
    case NodeKind::FuncDecl: return "FuncDecl";
  }
  return "?";
}

std::string_view syntax_kind_name(SyntaxKind k) {
  switch (k) {
    case SyntaxKind::CallExpr: return "CallExpr";
    case SyntaxKind::RangeStmt: return "RangeStmt";
    case SyntaxKind::SpawnStmt: return "SpawnStmt";
    case SyntaxKind::SelectStmt: return "SelectStmt";
    case SyntaxKind::DeferStmt: return "DeferStmt";
    case SyntaxKind::PanicCall: return "PanicCall";
    case SyntaxKind::BasicLiteral: return "BasicLiteral";
    case SyntaxKind::BinaryExpr: return "BinaryExpr";
    case SyntaxKind::SelectorExpr: return "SelectorExpr";
    case SyntaxKind::TypeSpelling: return "TypeSpelling";
    case SyntaxKind::VarDecl: return "VarDecl";
    case SyntaxKind::ConstDecl: return "ConstDecl";
    case SyntaxKind::FieldDecl: return "FieldDecl";
    case SyntaxKind::ConversionExpr: return "ConversionExpr";
    case SyntaxKind::ImportDecl: return "ImportDecl";
    case SyntaxKind::Other: return "Other";
  }
  return "?";
}

}  // namespace chainlint::go
