package cli

import (
	"reflect"
	"unsafe"
)

// DebugLayout prints struct layout details for operators.
func DebugLayout(v interface{}) (string, uintptr) {
	return reflect.TypeOf(v).String(), unsafe.Sizeof(v) // decoy: cosmos/unsafe-package
}
